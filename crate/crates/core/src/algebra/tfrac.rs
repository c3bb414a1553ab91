use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::tpoly::rational_content;
use super::{Rational, TPoly};

/// Rational function in `t`, kept reduced with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TFrac {
    num: TPoly,
    den: TPoly,
}

impl TFrac {
    pub fn new(num: TPoly, den: TPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g);
        let den = den.exact_div(&g);
        let lc = den.lc().recip();
        TFrac {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn zero() -> Self {
        TFrac {
            num: TPoly::zero(),
            den: TPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(TPoly::one())
    }

    pub fn from_poly(p: TPoly) -> Self {
        TFrac {
            num: p,
            den: TPoly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(TPoly::constant(c))
    }

    pub fn num(&self) -> &TPoly {
        &self.num
    }

    pub fn den(&self) -> &TPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> TFrac {
        TFrac::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> TFrac {
        if c.is_zero() {
            return TFrac::zero();
        }
        TFrac {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn derivative(&self) -> TFrac {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        TFrac::new(n, &self.den * &self.den)
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// Integer presentation `N / D` with `N, D` integral, all coefficients jointly
    /// coprime and `D` with positive leading coefficient.
    pub fn integer_parts(&self) -> (TPoly, TPoly) {
        let c = rational_content(self.num.coeffs().iter().chain(self.den.coeffs()));
        let c = c.recip();
        (self.num.scale(&c), self.den.scale(&c))
    }

    /// Rendering in the compact style `3/(54t2+2t)`, `(18t+1)`, `-1/(6t+12)`.
    pub fn render(&self) -> String {
        if self.den.is_one() {
            return render_coefficient(&self.num);
        }
        let (n, d) = self.integer_parts();
        let ns = if n.coeffs().len() == 1 || is_monomial(&n) {
            n.render()
        } else {
            format!("({})", n.render())
        };
        let ds = if is_monomial(&d) && d.lc().is_one() {
            d.render()
        } else {
            format!("({})", d.render())
        };
        format!("{ns}/{ds}")
    }
}

fn is_monomial(p: &TPoly) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
}

/// Matrix-entry rendering: constants bare, other polynomials in parentheses.
pub fn render_coefficient(p: &TPoly) -> String {
    if p.is_constant() {
        p.render()
    } else {
        format!("({})", p.render())
    }
}

impl fmt::Display for TFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add<&TFrac> for &TFrac {
    type Output = TFrac;
    fn add(self, rhs: &TFrac) -> TFrac {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return TFrac::new(&self.num + &rhs.num, self.den.clone());
        }
        TFrac::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&TFrac> for &TFrac {
    type Output = TFrac;
    fn sub(self, rhs: &TFrac) -> TFrac {
        self + &(-rhs)
    }
}

impl Mul<&TFrac> for &TFrac {
    type Output = TFrac;
    fn mul(self, rhs: &TFrac) -> TFrac {
        if self.is_zero() || rhs.is_zero() {
            return TFrac::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return TFrac::from_poly(&self.num * &rhs.num);
        }
        TFrac::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&TFrac> for &TFrac {
    type Output = TFrac;
    fn div(self, rhs: &TFrac) -> TFrac {
        assert!(!rhs.is_zero(), "division by zero rational function");
        self * &rhs.inv()
    }
}

impl Neg for &TFrac {
    type Output = TFrac;
    fn neg(self) -> TFrac {
        TFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for TFrac {
    type Output = TFrac;
    fn neg(self) -> TFrac {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<TFrac> for TFrac {
            type Output = TFrac;
            fn $m(self, rhs: TFrac) -> TFrac {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&TFrac> for TFrac {
            type Output = TFrac;
            fn $m(self, rhs: &TFrac) -> TFrac {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<TPoly> for TFrac {
    fn from(p: TPoly) -> Self {
        TFrac::from_poly(p)
    }
}

/// Whether the constant `c` is negative (used for sign conventions on rows).
pub(crate) fn is_negative_constant(p: &TPoly) -> bool {
    p.is_constant() && p.lc().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_rendering() {
        // 3 / (54 t^2 + 2 t)
        let f = TFrac::new(TPoly::from_i64(&[3]), TPoly::from_i64(&[0, 2, 54]));
        assert_eq!(f.render(), "3/(54t2+2t)");
        assert!(f.den().lc().is_one());
        let g = TFrac::new(TPoly::from_i64(&[-1]), TPoly::from_i64(&[12, 6]));
        assert_eq!(g.render(), "-1/(6t+12)");
        let h = TFrac::new(TPoly::from_i64(&[0, 1]), TPoly::from_i64(&[0, 0, 1]));
        assert_eq!(h.render(), "1/t");
    }

    #[test]
    fn field_operations() {
        let a = TFrac::new(TPoly::from_i64(&[1]), TPoly::from_i64(&[0, 1]));
        let b = TFrac::new(TPoly::from_i64(&[1]), TPoly::from_i64(&[1, 1]));
        let s = &a + &b; // (2t+1)/(t^2+t)
        assert_eq!(s, TFrac::new(TPoly::from_i64(&[1, 2]), TPoly::from_i64(&[0, 1, 1])));
        assert_eq!(&(&s - &b), &a);
        assert_eq!(&(&a / &a), &TFrac::one());
        // d/dt (1/t) = -1/t^2
        assert_eq!(
            a.derivative(),
            TFrac::new(TPoly::from_i64(&[-1]), TPoly::from_i64(&[0, 0, 1]))
        );
    }
}
