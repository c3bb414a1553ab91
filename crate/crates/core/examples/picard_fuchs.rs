//! Picard-Fuchs operators of `∫ P dx/(f - t)`.

use gmhodge::algebra::{MultiPoly, WeightedVars};
use gmhodge::brieskorn::TameContext;
use gmhodge::cli::parse_poly;
use gmhodge::picard_fuchs::pfeq;

fn show(poly: &str, names: &[&str], form: &str) -> gmhodge::Result<()> {
    let vars = WeightedVars::standard(names)?;
    let f = parse_poly(poly, vars.names())?;
    let p: MultiPoly = parse_poly(form, vars.names())?;
    let ctx = TameContext::new(f, vars)?;
    let eq = pfeq(&ctx, &p, None)?;
    let terms: Vec<String> = eq
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("({c}) D^{i}"))
        .collect();
    println!("f = {poly}, P = {form}: order {}", eq.order);
    println!("  {} = 0", terms.join(" + "));
    Ok(())
}

fn main() -> gmhodge::Result<()> {
    show("x^5-5*x", &["x"], "1")?;
    show("x^2*y+x*y^2-x*y", &["x", "y"], "1")?;
    show("x^3+y^3", &["x", "y"], "x*y")?;
    Ok(())
}
