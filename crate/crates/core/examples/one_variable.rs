//! One variable: H'' reduces modulo `f'·Q[f] dx` and periods are sums of
//! residues, so the Picard-Fuchs operator can be checked on a root of `f = t`.

use gmhodge::algebra::{fmt_rational, MultiPoly, WeightedVars};
use gmhodge::brieskorn::TameContext;
use gmhodge::cli::parse_poly;
use gmhodge::gauss_manin::GaussManin;
use gmhodge::picard_fuchs::pfeq_with;

fn main() -> gmhodge::Result<()> {
    let vars = WeightedVars::standard(&["x"])?;
    let f = parse_poly("x^5-5*x", vars.names())?;
    let ctx = TameContext::new(f, vars)?;
    println!("A = {:?}", ctx.a_beta().iter().map(fmt_rational).collect::<Vec<_>>());

    let r = ctx.reduce_top(&parse_poly("x^9", ctx.vars().names())?)?;
    let coeffs: Vec<String> = r.coeffs.iter().map(|c| c.to_string()).collect();
    println!("x^9 dx = {:?} in the basis {:?}", coeffs, ctx.basis().render(ctx.vars().names()));

    let gm = GaussManin::new(&ctx)?;
    let eq = pfeq_with(&gm, &MultiPoly::one(1))?;
    println!("operator on dx: {:?}", eq.render());

    // Over a loop around a root x(t) of f = t, the period of dx/(f - t) is
    // x'(t) up to 2πi. Expand x(t0 + s) as a series and apply the operator.
    let t0 = 1.0;
    let x = root_series(t0, 1.5, eq.coeffs.len() + 1);
    let period_derivs: Vec<f64> = (0..eq.coeffs.len())
        .map(|i| x[i + 1] * (1..=i + 1).product::<usize>() as f64)
        .collect();
    let residual: f64 = eq
        .coeffs
        .iter()
        .zip(&period_derivs)
        .map(|(p, d)| eval(p.coeffs().iter().map(f64_of), t0) * d)
        .sum();
    let scale: f64 = eq
        .coeffs
        .iter()
        .zip(&period_derivs)
        .map(|(p, d)| (eval(p.coeffs().iter().map(f64_of), t0) * d).abs())
        .sum();
    println!("root x(1) = {:.12}, relative residual {:.1e}", x[0], residual / scale);
    Ok(())
}

/// Taylor coefficients of the root of `x^5 - 5x = t0 + s` near `guess`, by
/// Newton iteration on truncated power series.
fn root_series(t0: f64, guess: f64, len: usize) -> Vec<f64> {
    let mut x = vec![0.0; len];
    x[0] = guess;
    for _ in 0..60 {
        let x2 = mul(&x, &x);
        let x4 = mul(&x2, &x2);
        let x5 = mul(&x4, &x);
        let mut f: Vec<f64> = x5.iter().zip(&x).map(|(a, b)| a - 5.0 * b).collect();
        f[0] -= t0;
        f[1] -= 1.0;
        let df: Vec<f64> = x4.iter().map(|a| 5.0 * a).enumerate().map(|(i, a)| if i == 0 { a - 5.0 } else { a }).collect();
        let step = mul(&f, &recip(&df));
        x.iter_mut().zip(step).for_each(|(a, b)| *a -= b);
    }
    x
}

fn mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    (0..a.len()).map(|k| (0..=k).map(|i| a[i] * b[k - i]).sum()).collect()
}

fn recip(a: &[f64]) -> Vec<f64> {
    let mut r = vec![0.0; a.len()];
    r[0] = 1.0 / a[0];
    for k in 1..a.len() {
        r[k] = -(1..=k).map(|i| a[i] * r[k - i]).sum::<f64>() / a[0];
    }
    r
}

fn f64_of(c: &gmhodge::algebra::Rational) -> f64 {
    fmt_rational(c).split('/').map(|s| s.parse::<f64>().unwrap()).reduce(|a, b| a / b).unwrap()
}

fn eval(coeffs: impl DoubleEndedIterator<Item = f64>, t: f64) -> f64 {
    coeffs.rev().fold(0.0, |acc, c| acc * t + c)
}
