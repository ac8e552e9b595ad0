//! Exact rational scalars. All linear algebra in this crate is over `Q`;
//! no floating point anywhere.

use num_rational::Ratio;

pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn half(n: i64) -> Q {
    Q::new(n, 2)
}

/// Renders a rational as `p` or `p/q`.
pub fn format_q(x: Q) -> String {
    if x.is_integer() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let n: i64 = num.trim().parse().ok()?;
            let d: i64 = den.trim().parse().ok()?;
            if d == 0 {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<i64>().ok().map(Q::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["5/2", "-3", "0", "-7/3"] {
            let v = parse_q(s).unwrap();
            assert_eq!(format_q(v), s);
        }
        assert_eq!(parse_q("4/2"), Some(q(2)));
        assert!(parse_q("1/0").is_none());
    }
}
