use crate::tile::Tile;

/// Finds `copies` shifts `0 = a_1 < a_2 < ... <= max_shift` such that the
/// translated numeral sets of `tile` are pairwise disjoint, or `None`.
///
/// Two copies at distance `d` collide iff `d` is a difference of two numeral
/// offsets, so the search runs over the remaining distances only: each new
/// shift is the previous one plus an allowed distance, checked against all
/// earlier shifts.
pub fn disjoint_shifts(tile: &Tile, copies: usize, max_shift: usize) -> Option<Vec<usize>> {
    if copies == 0 {
        return Some(Vec::new());
    }
    let mut forbidden = vec![false; max_shift + 1];
    let nums = tile.numerals();
    for (i, &a) in nums.iter().enumerate() {
        for &b in &nums[i + 1..] {
            let d = b - a;
            if d > max_shift {
                break;
            }
            forbidden[d] = true;
        }
    }
    let allowed: Vec<usize> = (1..=max_shift).filter(|&d| !forbidden[d]).collect();
    let mut shifts = vec![0];
    if extend(&mut shifts, copies, max_shift, &allowed, &forbidden) {
        Some(shifts)
    } else {
        None
    }
}

fn extend(shifts: &mut Vec<usize>, copies: usize, max_shift: usize, allowed: &[usize], forbidden: &[bool]) -> bool {
    if shifts.len() == copies {
        return true;
    }
    let last = *shifts.last().unwrap();
    for &d in allowed {
        let a = last + d;
        if a > max_shift {
            break;
        }
        if shifts.iter().all(|&s| !forbidden[a - s]) {
            shifts.push(a);
            if extend(shifts, copies, max_shift, allowed, forbidden) {
                return true;
            }
            shifts.pop();
        }
    }
    false
}
