//! Parsing of sweep lists such as `2,4,6`, `2..10` or `2..10:2`.

use std::str::FromStr;

/// Parses a comma-separated list whose items are single values or
/// inclusive ranges `a..b`, optionally stepped as `a..b:step`. The empty
/// string is the empty list.
pub fn parse_list<T>(text: &str) -> Result<Vec<T>, String>
where
    T: FromStr + Copy + PartialOrd + std::ops::Add<Output = T> + TryFrom<u8>,
{
    let one: T = T::try_from(1u8).map_err(|_| "numeric type".to_string())?;
    let parse = |s: &str| {
        s.trim()
            .parse::<T>()
            .map_err(|_| format!("bad number `{s}` in `{text}`"))
    };
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let Some((lo, rest)) = item.split_once("..") else {
            out.push(parse(item)?);
            continue;
        };
        let (hi, step) = match rest.split_once(':') {
            Some((hi, step)) => (parse(hi)?, parse(step)?),
            None => (parse(rest)?, one),
        };
        if step < one {
            return Err(format!("step must be positive in `{item}`"));
        }
        let mut v = parse(lo)?;
        while v <= hi {
            out.push(v);
            v = v + step;
        }
    }
    Ok(out)
}
