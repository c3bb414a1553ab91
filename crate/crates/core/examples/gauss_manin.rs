//! Connection matrix and a few iterates of `∇` on `dx`.

use gmhodge::algebra::{MultiPoly, WeightedVars};
use gmhodge::brieskorn::TameContext;
use gmhodge::cli::parse_poly;
use gmhodge::gauss_manin::GaussManin;

fn main() -> gmhodge::Result<()> {
    let vars = WeightedVars::standard(&["x", "y"])?;
    let f = parse_poly("2*x^3+2*y^3-3*x^2-3*y^2", vars.names())?;
    let ctx = TameContext::new(f, vars)?;
    let gm = GaussManin::new(&ctx)?;

    let m = gm.nablamat();
    println!("S = {}", gm.s());
    println!("nabla = {} *", m.scale);
    for row in &m.body {
        let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
        println!("  [{}]", cells.join(", "));
    }

    let mut c = gm.class_of_top(&MultiPoly::one(2))?;
    for k in 1..=3 {
        c = gm.nabla(&c)?;
        let coords: Vec<String> = c.coords.iter().map(|x| x.render()).collect();
        println!("nabla^{k} dx = ({})", coords.join(", "));
    }
    Ok(())
}
