use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` keeps values in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Coordinate vector with respect to the standard basis of a [`Space`](super::Space).
pub type Vector = Vec<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p"` or `"p/q"` (optional sign on `p`, `q > 0` after normalization).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in rational literal {text:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in rational literal {text:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise, lowest terms.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn zero_vector(dim: usize) -> Vector {
    vec![Rational::zero(); dim]
}

pub fn basis_vector(dim: usize, index: usize) -> Vector {
    let mut v = zero_vector(dim);
    v[index] = Rational::one();
    v
}

pub fn add_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Rational, a: &[Rational]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn is_zero_vector(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn vector_text(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_are_canonical() {
        assert_eq!(format_rational(&parse_rational("6/-4").unwrap()), "-3/2");
        assert_eq!(format_rational(&parse_rational(" 10/5 ").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("-7").unwrap()), "-7");
        assert_eq!(format_rational(&parse_rational("0/9").unwrap()), "0");
    }

    #[test]
    fn parse_rejects_zero_denominator_and_garbage() {
        assert!(matches!(parse_rational("1/0"), Err(Error::Parse(_))));
        assert!(matches!(parse_rational("0.5"), Err(Error::Parse(_))));
        assert!(matches!(parse_rational("a/b"), Err(Error::Parse(_))));
    }

    #[test]
    fn big_values_stay_exact() {
        let x = parse_rational("123456789012345678901234567890/3").unwrap();
        assert_eq!(format_rational(&x), "41152263004115226300411522630");
    }
}
