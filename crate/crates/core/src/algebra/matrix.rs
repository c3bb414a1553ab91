//! Dense linear algebra over exact fields (Q and Q(t)).

use num_traits::{One, Zero};

use super::{Rational, TFrac, TPoly};

/// Field interface shared by [`Rational`] and [`TFrac`].
pub trait Field: Clone + PartialEq + Zero + One {
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn over(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
}

macro_rules! impl_field {
    ($t:ty) => {
        impl Field for $t {
            fn plus(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn minus(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn times(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn over(&self, rhs: &Self) -> Self {
                self / rhs
            }
            fn negate(&self) -> Self {
                -self
            }
        }
    };
}
impl_field!(Rational);
impl_field!(TFrac);

impl Zero for TFrac {
    fn zero() -> Self {
        TFrac::zero()
    }
    fn is_zero(&self) -> bool {
        TFrac::is_zero(self)
    }
}

impl One for TFrac {
    fn one() -> Self {
        TFrac::one()
    }
}

pub type Matrix<F> = Vec<Vec<F>>;

pub fn identity<F: Field>(n: usize) -> Matrix<F> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect()
}

pub fn transpose<F: Field>(m: &[Vec<F>]) -> Matrix<F> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Matrix<F> {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(F::zero(), |acc, k| {
                        if row[k].is_zero() {
                            acc
                        } else {
                            acc.plus(&row[k].times(&b[k][j]))
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// Row vector times matrix.
pub fn vec_mul<F: Field>(v: &[F], m: &[Vec<F>]) -> Vec<F> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    (0..cols)
        .map(|j| {
            v.iter().zip(m).fold(F::zero(), |acc, (a, row)| {
                if a.is_zero() {
                    acc
                } else {
                    acc.plus(&a.times(&row[j]))
                }
            })
        })
        .collect()
}

/// Determinant by Gaussian elimination.
pub fn det<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a: Matrix<F> = m.to_vec();
    let mut d = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            a.swap(p, c);
            d = d.negate();
        }
        let piv = a[c][c].clone();
        d = d.times(&piv);
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let u = a[r][c].over(&piv);
            for k in c..n {
                let v = a[c][k].times(&u);
                a[r][k] = a[r][k].minus(&v);
            }
        }
    }
    d
}

/// Reduced row echelon form and pivot columns.
pub fn rref<F: Field>(m: &[Vec<F>]) -> (Matrix<F>, Vec<usize>) {
    let mut a: Matrix<F> = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = F::one().over(&a[r][c]);
        for k in c..cols {
            a[r][k] = a[r][k].times(&inv);
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let u = a[i][c].clone();
            for k in c..cols {
                let v = a[r][k].times(&u);
                a[i][k] = a[i][k].minus(&v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    rref(m).1.len()
}

/// Basis of the right kernel `{v : m v = 0}`, one vector per free column in
/// increasing column order, each with a 1 at its free column.
pub fn kernel<F: Field>(m: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let (a, pivots) = rref(m);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = a[r][free].negate();
        }
        out.push(v);
    }
    out
}

/// Solves `x m = b` for a row vector `x` when `m` is square and invertible.
pub fn solve_left<F: Field>(m: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    // x m = b  <=>  m^T x^T = b^T
    let mt = transpose(m);
    let n = mt.len();
    let aug: Matrix<F> = mt
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (a, pivots) = rref(&aug);
    if pivots.len() != n || pivots.contains(&n) {
        return None;
    }
    Some((0..n).map(|i| a[i][n].clone()).collect())
}

/// Characteristic polynomial `det(t I - A)` via reduction to Hessenberg form.
pub fn charpoly(m: &[Vec<Rational>]) -> TPoly {
    let n = m.len();
    let mut h: Matrix<Rational> = m.to_vec();
    for col in 1..n.saturating_sub(1) {
        let Some(i) = (col..n).find(|&i| !h[i][col - 1].is_zero()) else {
            continue;
        };
        if i != col {
            h.swap(i, col);
            for row in h.iter_mut() {
                row.swap(i, col);
            }
        }
        for j in col + 1..n {
            if h[j][col - 1].is_zero() {
                continue;
            }
            let u = &h[j][col - 1] / &h[col][col - 1];
            for k in 0..n {
                let v = &h[col][k] * &u;
                h[j][k] -= v;
            }
            for row in h.iter_mut() {
                let v = &row[j] * &u;
                row[col] += v;
            }
        }
    }
    let mut p: Vec<TPoly> = vec![TPoly::one()];
    for size in 1..=n {
        let mut cur = &(&TPoly::t() - &TPoly::constant(h[size - 1][size - 1].clone())) * &p[size - 1];
        let mut prod = Rational::one();
        for i in (1..size).rev() {
            prod *= &h[i][i - 1];
            if prod.is_zero() {
                break;
            }
            let c = &prod * &h[i - 1][size - 1];
            cur = &cur - &p[i - 1].scale(&c);
        }
        p.push(cur);
    }
    p.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qq;

    fn q_mat(rows: &[&[i64]]) -> Matrix<Rational> {
        rows.iter()
            .map(|r| r.iter().map(|&x| qq(x, 1)).collect())
            .collect()
    }

    /// Faddeev-LeVerrier, used as an independent oracle.
    fn charpoly_leverrier(a: &Matrix<Rational>) -> TPoly {
        let n = a.len();
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut mk: Matrix<Rational> = vec![vec![Rational::zero(); n]; n];
        for k in 1..=n {
            let mut next = mat_mul(a, &mk);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] += &coeffs[n - k + 1];
            }
            mk = next;
            let am = mat_mul(a, &mk);
            let tr: Rational = (0..n).map(|i| am[i][i].clone()).sum();
            coeffs[n - k] = -tr / qq(k as i64, 1);
        }
        TPoly::from_coeffs(coeffs)
    }

    #[test]
    fn charpoly_agrees_with_leverrier() {
        let a = q_mat(&[&[0, 2, 1, 0], &[1, 0, 0, 3], &[0, 1, 5, 0], &[2, 0, 0, 1]]);
        assert_eq!(charpoly(&a), charpoly_leverrier(&a));
        let b = q_mat(&[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]]);
        assert_eq!(charpoly(&b), TPoly::from_i64(&[0, 0, 0, 1]));
    }

    #[test]
    fn determinant_and_kernel() {
        let a = q_mat(&[&[1, 2], &[3, 4]]);
        assert_eq!(det(&a), qq(-2, 1));
        let s = q_mat(&[&[1, 0, 1], &[0, 1, 1]]);
        let k = kernel(&s, 3);
        assert_eq!(k, vec![vec![qq(-1, 1), qq(-1, 1), qq(1, 1)]]);
        let x = solve_left(&a, &[qq(5, 1), qq(8, 1)]).unwrap();
        assert_eq!(vec_mul(&x, &a), vec![qq(5, 1), qq(8, 1)]);
    }
}
