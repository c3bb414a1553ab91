//! Writes a top form `P dx` and an n-form in the Brieskorn-module bases and
//! re-expands the witnesses to confirm the identities.

use gmhodge::algebra::{FormN, WeightedVars};
use gmhodge::brieskorn::TameContext;
use gmhodge::cli::{parse_form_n, parse_poly};

fn main() -> gmhodge::Result<()> {
    let vars = WeightedVars::standard(&["x", "y"])?;
    let f = parse_poly("x^2*y+x*y^2-x*y", vars.names())?;
    let ctx = TameContext::new(f, vars)?;
    let names = ctx.vars().names().to_vec();
    let basis = ctx.basis().render(&names);

    let p = parse_poly("x^4*y+3*x^2", &names)?;
    let r = ctx.reduce_top(&p)?;
    println!("P dx with P = {}", p.render(&names, ctx.alpha()));
    for (m, c) in basis.iter().zip(&r.coeffs) {
        println!("  omega[{m}]: {c}");
    }
    assert_eq!(ctx.expand_top(&r, false), p);

    let w = FormN::from_comps(parse_form_n("x^3; y^2*x", &names)?);
    let r = ctx.reduce_n(&w)?;
    println!("x^3 dy - x*y^2 dx:");
    for (m, c) in basis.iter().zip(&r.coeffs) {
        println!("  eta[{m}]: {c}");
    }
    assert_eq!(ctx.expand_n(&r, false), w);
    println!("both witnesses re-expand exactly");
    Ok(())
}
