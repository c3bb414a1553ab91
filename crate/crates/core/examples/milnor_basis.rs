//! Milnor algebra of a tame polynomial: Groebner basis of the Jacobian ideal,
//! the monomial basis, the exponents `A_β` and the multiplication-by-f matrix.
//!
//! ```text
//! cargo run --example milnor_basis
//! ```

use gmhodge::algebra::{fmt_rational, WeightedVars};
use gmhodge::brieskorn::TameContext;
use gmhodge::cli::parse_poly;
use gmhodge::gauss_manin::{char_s, multiplication_matrix, squarefree_s};

fn main() -> gmhodge::Result<()> {
    let vars = WeightedVars::standard(&["x", "y"])?;
    let f = parse_poly("x^4+y^4-x", vars.names())?;
    let ctx = TameContext::new(f, vars)?;

    println!("d = {}, mu = {}", ctx.d(), ctx.mu());
    let names = ctx.vars().names();
    for (m, a) in ctx.basis().render(names).iter().zip(ctx.a_beta()) {
        println!("  {m:>5}  A = {}", fmt_rational(a));
    }

    println!("Groebner basis of jacob(g):");
    for p in ctx.gb_g().basis() {
        println!("  {}", p.render(names, ctx.alpha()));
    }

    println!("multiplication by f:");
    for row in multiplication_matrix(&ctx) {
        let cells: Vec<String> = row.iter().map(fmt_rational).collect();
        println!("  [{}]", cells.join(", "));
    }
    println!("S(t)        = {}", char_s(&ctx));
    println!("squarefree  = {}", squarefree_s(&ctx));
    Ok(())
}
