use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rational_from_int(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Parses the text form `p/q` or `p`. Whitespace is not accepted.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    if s.is_empty() || s.chars().any(char::is_whitespace) {
        return Err(bad());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: `p/q` in lowest terms, `p` when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// The unique integer vector proportional to `v` whose entries have gcd 1 and
/// whose first nonzero entry is positive.
pub fn primitivize(v: &[Rational]) -> Result<Vec<BigInt>> {
    let first = v.iter().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let g = out.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if first.is_negative() { -BigInt::one() } else { BigInt::one() };
    let scale = g * sign;
    for x in &mut out {
        *x = &*x / &scale;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn primitivize_examples() {
        assert_eq!(
            primitivize(&[rat(1, 2), rat(-1, 2), int(1)]).unwrap(),
            ints(&[1, -1, 2])
        );
        assert_eq!(primitivize(&[int(3), int(6), int(9)]).unwrap(), ints(&[1, 2, 3]));
        assert_eq!(primitivize(&[int(-2), int(4)]).unwrap(), ints(&[1, -2]));
        assert_eq!(primitivize(&[int(0), int(0)]), Err(Error::ZeroVector));
        assert_eq!(primitivize(&[int(0), rat(-3, 4)]).unwrap(), ints(&[0, 1]));
    }

    #[test]
    fn text_form() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("3/-6").unwrap(), rat(-1, 2));
        assert_eq!(format_rational(&rat(-3, 6)), "-1/2");
        assert_eq!(format_rational(&int(5)), "5");
        for bad in ["", "1/0", "1 /2", "a", "1/2/3", " 1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    proptest::proptest! {
        #[test]
        fn text_round_trip(n in -1_000_000i64..1_000_000, d in 1i64..100_000) {
            let r = rat(n, d);
            let s = format_rational(&r);
            proptest::prop_assert_eq!(parse_rational(&s).unwrap(), r);
        }
    }
}
