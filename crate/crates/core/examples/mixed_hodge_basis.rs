//! A basis of H'' compatible with the mixed Hodge structure, in both the
//! generic-value and the tracked elimination modes.
//!
//! Each row is `scalar · (primitive row)` in the monomial basis; the
//! determinant of the primitive rows vanishes only on the exceptional fibres.

use gmhodge::algebra::WeightedVars;
use gmhodge::brieskorn::TameContext;
use gmhodge::cli::{parse_poly, parse_tpoly};
use gmhodge::gauss_manin::GaussManin;
use gmhodge::mhs::{changebase, dbeta, imk, render_dbeta, DBetaMode};

fn main() -> gmhodge::Result<()> {
    let vars = WeightedVars::standard(&["x", "y"])?;
    let f = parse_poly("x^2*y+x*y^2-x*y", vars.names())?;
    let ctx = TameContext::new(f, vars)?;
    let gm = GaussManin::with_s(&ctx, parse_tpoly("t^2+t/27")?)?;

    for mode in [DBetaMode::Generic, DBetaMode::Tracked] {
        let db = dbeta(&ctx, mode)?;
        println!("== {mode:?}");
        println!("d_beta = {}   E(t) = {}", render_dbeta(&db), db.exceptional);
        let sets = imk(&ctx, &db).render(&ctx);
        println!("index sets (weight n, n+1): {:?} {:?}", sets[0], sets[1]);
        let b = changebase(&gm, &db)?;
        println!("{}", b.scalars().join(","));
        print!("{}", b.render_matrix());
        println!("det = {}", b.det);
    }
    Ok(())
}
