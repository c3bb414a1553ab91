//! Exact arithmetic: rationals, polynomials, rational functions in `t`,
//! polynomial differential forms and dense linear algebra.

pub mod forms;
pub mod matrix;
mod monomial;
mod multipoly;
mod tfrac;
mod tpoly;
mod weighted;

pub use forms::{FormN, FormNm1, FormTop};
pub use matrix::Field;
pub use monomial::{Monomial, MonomialOrder, OrderKey, RevLex};
pub use multipoly::MultiPoly;
pub use tfrac::{render_coefficient, TFrac};
pub(crate) use tfrac::is_negative_constant;
pub use tpoly::{rational_content, TPoly};
pub use weighted::WeightedVars;

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

/// `n / d` as an exact rational.
pub fn qq(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `p/q`, or `p` for integers.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with optional sign.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let n: BigInt = a.trim().parse().ok()?;
            let d: BigInt = b.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}
