//! End-to-end acceptance criteria. Run with
//! `cargo test -p gmhodge --test acceptance -- --nocapture` to see the
//! PASS/FAIL table.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gmhodge::algebra::forms::dform_n;
use gmhodge::algebra::{qq, render_coefficient, FormN, Monomial, MultiPoly, Rational, TFrac, TPoly, WeightedVars};
use gmhodge::brieskorn::{Module, ModuleClass, TameContext};
use gmhodge::gauss_manin::{char_s, entry_degree_bound, squarefree_s, GaussManin};
use gmhodge::groebner::GroebnerBasis;
use gmhodge::mhs::{
    abeta_bounds_hold, changebase, present_row, dbeta, dbeta_bounds_hold, griffiths_transversality, imk, muldf, render_dbeta,
    residue_killer, roots_contained, DBetaMode, MHSBasis,
};
use gmhodge::picard_fuchs::pfeq;

/// Cases per randomized property.
const CASES: usize = 200;
const SEED: u64 = 0x6d68_6f64_6765;
/// Absolute tolerance of the numerical Picard-Fuchs check.
const NUMERIC_TOL_EXP: i32 = -20;
/// Working precision of the numerical check, in bits (about 42 digits).
const WORKING_BITS: u64 = 140;

type Check = Result<(), String>;

fn ensure(cond: bool, what: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(got: T, want: T, what: &str) -> Check {
    ensure(got == want, format!("{what}: got {got:?}, want {want:?}"))
}

fn ctx(poly: &[(i64, &[u32])], names: &[&str], alpha: &[u32]) -> TameContext {
    let vars = WeightedVars::new(names.iter().map(|s| s.to_string()).collect(), alpha.to_vec()).unwrap();
    TameContext::new(MultiPoly::from_int_terms(names.len(), poly), vars).unwrap()
}

fn quintic() -> TameContext {
    ctx(&[(1, &[5]), (-5, &[1])], &["x"], &[1])
}

fn triangle() -> TameContext {
    ctx(&[(1, &[2, 1]), (1, &[1, 2]), (-1, &[1, 1])], &["x", "y"], &[1, 1])
}

fn cubic_pair() -> TameContext {
    ctx(&[(2, &[3, 0]), (2, &[0, 3]), (-3, &[2, 0]), (-3, &[0, 2])], &["x", "y"], &[1, 1])
}

fn quartic() -> TameContext {
    ctx(&[(1, &[4, 0]), (1, &[0, 4]), (-1, &[1, 0])], &["x", "y"], &[1, 1])
}

fn tp(text: &str) -> TPoly {
    gmhodge::cli::parse_tpoly(text).unwrap()
}

fn okbase(c: &TameContext) -> Vec<String> {
    c.basis().render(c.vars().names())
}

fn rendered_rows(m: &[Vec<TPoly>]) -> Vec<String> {
    m.iter()
        .map(|r| r.iter().map(render_coefficient).collect::<Vec<_>>().join(","))
        .collect()
}

fn basis_rows(b: &MHSBasis) -> Vec<String> {
    rendered_rows(&b.primitive_matrix())
}

fn labels(c: &TameContext, sets: &[Vec<usize>]) -> Vec<Vec<String>> {
    sets.iter()
        .map(|s| s.iter().map(|&b| c.basis().monomials()[b].render(c.vars().names())).collect())
        .collect()
}

fn within(start: Instant, limit: Duration) -> Check {
    ensure(start.elapsed() < limit, format!("took {:?}, limit {:?}", start.elapsed(), limit))
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let c = quintic();
    eq(okbase(&c), vec!["x3".into(), "x2".into(), "x".into(), "1".into()], "okbase")?;
    let a: Vec<Rational> = vec![qq(4, 5), qq(3, 5), qq(2, 5), qq(1, 5)];
    eq(c.a_beta().to_vec(), a, "A_beta")?;
    eq(char_s(&c), tp("t^4-256"), "S")?;
    let gm = GaussManin::new(&c).map_err(|e| e.to_string())?;
    let m = gm.nablamat();
    eq(m.scale.render(), "1/(5t4-1280)".into(), "nablamat scale")?;
    eq(
        rendered_rows(&m.body),
        vec![
            "(-t3),128,(-48t),(16t2)".into(),
            "(4t2),(-2t3),192,(-64t)".into(),
            "(-16t),(8t2),(-3t3),256".into(),
            "64,(-32t),(12t2),(-4t3)".into(),
        ],
        "nablamat body",
    )?;
    let eq1 = pfeq(&c, &MultiPoly::one(1), None).map_err(|e| e.to_string())?;
    eq(
        eq1.coeffs.clone(),
        vec![tp("6144"), tp("35625*t"), tp("33375*t^2"), tp("8750*t^3"), tp("625*t^4-160000")],
        "PFeq",
    )?;
    within(start, Duration::from_secs(1))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let c = triangle();
    eq(okbase(&c), ["y2", "y", "x", "1"].map(String::from).to_vec(), "okbase")?;
    let text = muldf(&c, true).render();
    let rows: Vec<Vec<String>> = text
        .lines()
        .map(|l| l.trim_end_matches(',').split(',').map(|s| s.trim().to_string()).collect())
        .collect();
    eq(
        rows,
        vec![
            ["(-3t+1/18)*x0^2", "-1/18*x0^3", "0", "0"].map(String::from).to_vec(),
            ["1/6*x0", "(-3t-1/6)*x0^2", "0", "0"].map(String::from).to_vec(),
            ["1/6*x0", "-1/6*x0^2", "(-3t)*x0^2", "0"].map(String::from).to_vec(),
            ["1/2", "-1/2*x0", "0", "(-3t)*x0^2"].map(String::from).to_vec(),
        ],
        "muldF(f-t)",
    )?;
    eq(char_s(&c), tp("t^4+t^3/27"), "S")?;
    let s = tp("t*(t+1/27)");
    let gm = GaussManin::with_s(&c, s.clone()).map_err(|e| e.to_string())?;
    let m = gm.nablamat();
    eq(m.scale.render(), "1/(54t2+2t)".into(), "nablamat scale")?;
    eq(
        rendered_rows(&m.body),
        ["(18t+1),(-18t-1),0,(-2t)", "1,-1,0,(-6t)", "1,-1,0,(-6t)", "3,-3,0,(-18t)"]
            .map(String::from)
            .to_vec(),
        "nablamat body",
    )?;
    let gen = dbeta(&c, DBetaMode::Generic).map_err(|e| e.to_string())?;
    let trk = dbeta(&c, DBetaMode::Tracked).map_err(|e| e.to_string())?;
    eq(render_dbeta(&gen), "0,2,2,4".into(), "dbeta generic")?;
    eq(render_dbeta(&trk), "2,2,2,2".into(), "dbeta tracked")?;
    let ig = imk(&c, &gen);
    let it = imk(&c, &trk);
    eq(labels(&c, &ig.mid), vec![vec!["1".into()], vec!["1".into()]], "Imk generic mid")?;
    eq(labels(&c, &ig.top), vec![vec!["x".into(), "y".into()]], "Imk generic top")?;
    eq(labels(&c, &it.mid), vec![vec!["1".into()], vec!["y2".into()]], "Imk tracked mid")?;
    eq(labels(&c, &it.top), vec![vec!["x".into(), "y".into()]], "Imk tracked top")?;
    let bg = changebase(&gm, &gen).map_err(|e| e.to_string())?;
    eq(bg.scalars(), ["1", "3/(54t2+2t)", "1", "1"].map(String::from).to_vec(), "changebase generic scalars")?;
    eq(
        basis_rows(&bg),
        ["0,0,0,1", "1,-1,0,(-6t)", "0,0,1,0", "0,1,0,0"].map(String::from).to_vec(),
        "changebase generic rows",
    )?;
    eq(bg.det.clone(), TPoly::one(), "changebase generic det")?;
    let bt = changebase(&gm, &trk).map_err(|e| e.to_string())?;
    eq(bt.scalars(), ["1", "1/(54t2+2t)", "1", "1"].map(String::from).to_vec(), "changebase tracked scalars")?;
    eq(
        basis_rows(&bt),
        ["0,0,0,1", "(18t+1),(-18t-1),0,(-2t)", "0,0,1,0", "0,1,0,0"].map(String::from).to_vec(),
        "changebase tracked rows",
    )?;
    eq(bt.det.clone(), tp("18*t+1"), "changebase tracked det")?;
    let eq2 = pfeq(&c, &MultiPoly::one(2), Some(s)).map_err(|e| e.to_string())?;
    eq(
        eq2.padded.clone(),
        vec![tp("6"), tp("54*t+1"), tp("27*t^2+t"), TPoly::zero(), TPoly::zero()],
        "PFeq",
    )?;
    within(start, Duration::from_secs(5))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let c = cubic_pair();
    eq(okbase(&c), ["xy", "y", "x", "1"].map(String::from).to_vec(), "okbase")?;
    eq(char_s(&c), tp("t^4+4*t^3+5*t^2+2*t"), "S")?;
    let gm = GaussManin::with_s(&c, tp("t*(t+1)*(t+2)")).map_err(|e| e.to_string())?;
    let trk = dbeta(&c, DBetaMode::Tracked).map_err(|e| e.to_string())?;
    let b = changebase(&gm, &trk).map_err(|e| e.to_string())?;
    eq(b.scalars(), ["1", "-1/(6t+12)", "1", "1"].map(String::from).to_vec(), "scalars")?;
    eq(
        basis_rows(&b),
        ["0,0,0,1", "-2,1,1,0", "0,0,1,0", "0,1,0,0"].map(String::from).to_vec(),
        "rows",
    )?;
    eq(b.det.clone(), tp("-2"), "det")?;
    within(start, Duration::from_secs(5))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let c = quartic();
    eq(c.mu(), 9, "mu")?;
    eq(
        okbase(&c),
        ["x2y2", "xy2", "x2y", "y2", "xy", "x2", "y", "x", "1"].map(String::from).to_vec(),
        "okbase",
    )?;
    eq(squarefree_s(&c), tp("t^3+27/256"), "squarefree S")?;
    let gen = dbeta(&c, DBetaMode::Generic).map_err(|e| e.to_string())?;
    eq(render_dbeta(&gen), "2,2,2,5,2,2,5,2,5".into(), "dbeta generic")?;
    let sets = imk(&c, &gen);
    eq(
        labels(&c, &sets.mid),
        vec![
            ["1", "x", "y"].map(String::from).to_vec(),
            ["y", "y2", "x2y2"].map(String::from).to_vec(),
        ],
        "Imk mid",
    )?;
    eq(labels(&c, &sets.top), vec![["x2", "xy", "y2"].map(String::from).to_vec()], "Imk top")?;
    let gm = GaussManin::with_s(&c, tp("t^3+27/256")).map_err(|e| e.to_string())?;
    let b = changebase(&gm, &gen).map_err(|e| e.to_string())?;
    eq(
        b.scalars(),
        ["1", "1", "1", "4/(256t3+27)", "24/(256t3+27)", "1/(256t3+27)", "1", "1", "1"]
            .map(String::from)
            .to_vec(),
        "scalars",
    )?;
    let golden = [
        "0,0,0,0,0,0,0,0,1",
        "0,0,0,0,0,0,0,1,0",
        "0,0,0,0,0,0,1,0,0",
        "0,0,9,0,0,0,(-16t2),0,0",
        "3,(-2t),0,0,0,0,0,0,0",
        "(128t2),9,0,0,0,0,0,0,0",
        "0,0,0,0,0,1,0,0,0",
        "0,0,0,0,1,0,0,0,0",
        "0,0,0,1,0,0,0,0,0",
    ];
    eq(basis_rows(&b), golden.map(String::from).to_vec(), "rows")?;
    eq(b.det.clone(), tp("2304*t^3+243"), "det")?;
    // The two-step manual elimination on rows 5 and 6. Each result is a unit
    // of the localized ring times a standard basis vector.
    let s_unit = tp("256*t^3+27");
    let prim = b.primitive_matrix();
    let comb = |k: &str, u: &[TPoly], v: &[TPoly]| -> Vec<TFrac> {
        let k = TFrac::from_poly(tp(k));
        u.iter()
            .zip(v)
            .map(|(x, y)| &(&k * &TFrac::from_poly(x.clone())) + &TFrac::from_poly(y.clone()))
            .collect()
    };
    let unit_times = |row: &[TFrac], k: usize, what: &str| -> Result<Vec<TPoly>, String> {
        let (scalar, p) = present_row(row);
        let e: Vec<TPoly> = (0..9).map(|j| if j == k { TPoly::one() } else { TPoly::zero() }).collect();
        eq(p.clone(), e, what)?;
        ensure(
            roots_contained(scalar.num(), &s_unit) && roots_contained(scalar.den(), &s_unit),
            format!("{what}: scalar {} is not a unit", scalar.render()),
        )?;
        Ok(p)
    };
    let row6 = unit_times(&comb("-128*t^2/3", &prim[4], &prim[5]), 1, "manual row 6")?;
    unit_times(&comb("2*t", &row6, &prim[4]), 0, "manual row 5")?;
    let f = c.f();
    let target = &MultiPoly::from_int_terms(2, &[(9, &[2, 1])]) - &(&f.pow(2) * &MultiPoly::var(2, 1)).scale(&qq(16, 1));
    ensure(c.gb_f().reduce(&target).is_zero(), "9x^2y-16f^2y not in jacob(f)")?;
    within(start, Duration::from_secs(30))
}

// ---- criterion 5: randomized property suites ----

fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, alpha: &[u32], max_deg: u64, terms: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(nvars);
    for _ in 0..terms {
        let e: Vec<u32> = (0..nvars).map(|i| rng.gen_range(0..=(max_deg / alpha[i] as u64) as u32)).collect();
        let m = Monomial::from_exponents(e);
        if m.wdeg(alpha) > max_deg {
            continue;
        }
        let c = rng.gen_range(-4i64..=4);
        p.add_term(m, qq(c, rng.gen_range(1..=3)));
    }
    p
}

/// Tame polynomials `g + lower terms` over a few isolated tops.
fn random_context(rng: &mut ChaCha8Rng) -> TameContext {
    let tops: [(&[(i64, &[u32])], &[&str], &[u32]); 5] = [
        (&[(1, &[3, 0]), (1, &[0, 3])], &["x", "y"], &[1, 1]),
        (&[(1, &[2, 1]), (1, &[1, 2])], &["x", "y"], &[1, 1]),
        (&[(1, &[3, 0]), (1, &[0, 4])], &["x", "y"], &[4, 3]),
        (&[(1, &[4]), ], &["x"], &[1]),
        (&[(1, &[2, 0]), (1, &[0, 2]), (1, &[0, 0])], &["x", "y"], &[1, 1]),
    ];
    loop {
        let (g, names, alpha) = tops[rng.gen_range(0..tops.len())];
        let nv = names.len();
        let vars = WeightedVars::new(names.iter().map(|s| s.to_string()).collect(), alpha.to_vec()).unwrap();
        let top = MultiPoly::from_int_terms(nv, g);
        let d = top.wdeg(alpha).unwrap();
        let lower = random_poly(rng, nv, alpha, d - 1, 3);
        let f = &top + &lower;
        if let Ok(c) = TameContext::new(f, vars) {
            return c;
        }
    }
}

fn examples() -> Vec<TameContext> {
    vec![quintic(), triangle(), cubic_pair(), quartic()]
}

fn prop_reductions_expand(rng: &mut ChaCha8Rng, ctxs: &[TameContext]) -> Check {
    for case in 0..CASES {
        let c = &ctxs[case % ctxs.len()];
        let nv = c.nvars();
        let total: u64 = c.alpha().iter().map(|&a| a as u64).sum();
        let p = random_poly(rng, nv, c.alpha(), 3 * c.d() - total, 3);
        let r = c.reduce_top(&p).map_err(|e| e.to_string())?;
        ensure(c.expand_top(&r, false) == p, format!("reduce_top expansion, case {case}"))?;
        let form_deg = p.wdeg(c.alpha()).map_or(0, |e| e + total);
        for (i, q) in r.coeffs.iter().enumerate() {
            if let Some(dq) = q.degree() {
                ensure(
                    qq(dq as i64, 1) <= c.degree_bound(form_deg, i),
                    format!("top degree bound, case {case}, beta {i}"),
                )?;
            }
        }
        let comps: Vec<MultiPoly> = (0..nv)
            .map(|k| random_poly(rng, nv, c.alpha(), 3 * c.d() - total + c.alpha()[k] as u64, 2))
            .collect();
        let w = FormN::from_comps(comps);
        let r = c.reduce_n(&w).map_err(|e| e.to_string())?;
        ensure(c.expand_n(&r, false) == w, format!("reduce_n expansion, case {case}"))?;
    }
    Ok(())
}

fn random_class(rng: &mut ChaCha8Rng, mu: usize) -> ModuleClass {
    let coeffs: Vec<TPoly> = (0..mu)
        .map(|_| TPoly::from_i64(&(0..rng.gen_range(0..3)).map(|_| rng.gen_range(-3i64..=3)).collect::<Vec<_>>()))
        .collect();
    ModuleClass::from_polys(Module::Second, &coeffs)
}

fn prop_connection(rng: &mut ChaCha8Rng, ctxs: &[TameContext]) -> Check {
    let gms: Vec<GaussManin<'_>> = ctxs.iter().map(|c| GaussManin::new(c).unwrap()).collect();
    for (gm, c) in gms.iter().zip(ctxs) {
        let m = gm.nablamat();
        let rows = m.rows();
        for b in 0..c.mu() {
            let nb = gm.nabla(&ModuleClass::unit(Module::Second, c.mu(), b)).map_err(|e| e.to_string())?;
            ensure(nb.coords == rows[b], format!("nablamat row {b} disagrees with nabla"))?;
            for (b2, p) in gm.body()[b].iter().enumerate() {
                if let Some(dp) = p.degree() {
                    ensure(
                        qq(dp as i64, 1) <= entry_degree_bound(c, gm.s(), b, b2),
                        format!("connection entry degree ({b},{b2})"),
                    )?;
                }
            }
        }
    }
    for case in 0..CASES {
        let k = case % gms.len();
        let gm = &gms[k];
        let cl = random_class(rng, ctxs[k].mu());
        let t_c = cl.scale(&TFrac::from_poly(TPoly::t()));
        let lhs = gm.nabla(&t_c).map_err(|e| e.to_string())?;
        let rhs = cl.add(&gm.nabla(&cl).map_err(|e| e.to_string())?.scale(&TFrac::from_poly(TPoly::t())));
        ensure(lhs == rhs, format!("Leibniz rule, case {case}"))?;
    }
    Ok(())
}

fn prop_random_contexts(rng: &mut ChaCha8Rng) -> Check {
    for case in 0..CASES {
        let c = random_context(rng);
        let s = char_s(&c);
        ensure(c.gb_f().reduce(&s.eval_poly(c.f())).is_zero(), format!("Cayley-Hamilton, case {case}"))?;
        ensure(abeta_bounds_hold(&c), format!("A_beta bounds, case {case}"))?;
        for i in 0..c.mu() {
            let lhs = dform_n(&c.eta_beta(i));
            ensure(lhs == c.monomial(i).scale(&c.a_beta()[i]), format!("d eta_beta, case {case}"))?;
        }
        let jac = GroebnerBasis::jacobian(c.f(), c.alpha());
        ensure(jac.okbase().map(|b| b.len()) == Ok(c.mu()), format!("Milnor number of f, case {case}"))?;
        if c.n() == 0 {
            continue;
        }
        let gm = GaussManin::new(&c).map_err(|e| e.to_string())?;
        for mode in [DBetaMode::Generic, DBetaMode::Tracked] {
            let db = dbeta(&c, mode).map_err(|e| e.to_string())?;
            ensure(dbeta_bounds_hold(&c, &db), format!("d_beta bounds, case {case}, {mode:?}"))?;
            let b = changebase(&gm, &db).map_err(|e| format!("changebase, case {case}: {e}"))?;
            ensure(
                roots_contained(&b.det, &(&s * &db.exceptional)),
                format!("determinant roots, case {case}, {mode:?}: det {}", b.det),
            )?;
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let ctxs = examples();
    let suites: [(&str, &dyn Fn(&mut ChaCha8Rng) -> Check); 3] = [
        ("reduction identities and degree bounds", &|r| prop_reductions_expand(r, &ctxs)),
        ("connection consistency and Leibniz rule", &|r| prop_connection(r, &ctxs)),
        ("random tame contexts", &|r| prop_random_contexts(r)),
    ];
    for (name, suite) in suites {
        let t = Instant::now();
        suite(&mut rng)?;
        println!("    {name}: {:.2}s", t.elapsed().as_secs_f64());
    }
    within(start, Duration::from_secs(60))
}

// ---- criterion 6 ----

fn criterion_6() -> Check {
    let cases: [(&[(i64, &[u32])], &[u32]); 4] = [
        (&[(1, &[2, 0]), (1, &[0, 2])], &[1, 1]),
        (&[(1, &[3, 0]), (1, &[0, 3])], &[1, 1]),
        (&[(1, &[4, 0]), (1, &[0, 4])], &[1, 1]),
        (&[(1, &[3, 0]), (1, &[0, 4])], &[4, 3]),
    ];
    for (g, alpha) in cases {
        let c = ctx(g, &["x", "y"], alpha);
        let gm = GaussManin::new(&c).map_err(|e| e.to_string())?;
        let n = c.n() as i64;
        for mode in [DBetaMode::Generic, DBetaMode::Tracked] {
            let db = dbeta(&c, mode).map_err(|e| e.to_string())?;
            let b = changebase(&gm, &db).map_err(|e| e.to_string())?;
            let mut seen = vec![false; c.mu()];
            for r in &b.rows {
                let a = &c.a_beta()[r.beta];
                let k = r.level as i64;
                let placed = if r.weight == c.n() + 1 {
                    *a == qq(n - k + 1, 1)
                } else {
                    qq(n - k, 1) < *a && *a < qq(n - k + 1, 1)
                };
                ensure(placed, format!("{} at beta {} misplaced", c.f().render(c.vars().names(), alpha), r.beta))?;
                let support: Vec<usize> = (0..c.mu()).filter(|&j| !r.primitive[j].is_zero()).collect();
                ensure(support == [r.beta] && r.primitive[r.beta].is_one(), "row is not a unit vector")?;
                ensure(!seen[r.beta], "repeated basis element")?;
                seen[r.beta] = true;
            }
            ensure(seen.iter().all(|&s| s), "not a permutation")?;
        }
    }
    Ok(())
}

// ---- criterion 7 ----

fn criterion_7() -> Check {
    let cases = [(triangle(), tp("t*(t+1/27)")), (cubic_pair(), tp("t*(t+1)*(t+2)"))];
    for (c, s) in &cases {
        let gm = GaussManin::with_s(c, s.clone()).map_err(|e| e.to_string())?;
        for mode in [DBetaMode::Generic, DBetaMode::Tracked] {
            let db = dbeta(c, mode).map_err(|e| e.to_string())?;
            let b = changebase(&gm, &db).map_err(|e| e.to_string())?;
            ensure(griffiths_transversality(&gm, &b).map_err(|e| e.to_string())?, "Griffiths transversality")?;
            let mut killed = false;
            for beta in 0..c.mu() {
                if let Some(k) = residue_killer(&gm, &b, beta).map_err(|e| e.to_string())? {
                    ensure(k <= c.mu(), "residue killer exceeds mu")?;
                    killed = true;
                }
            }
            ensure(killed, "no iterate lands in the weight-n span")?;
        }
    }
    Ok(())
}

// ---- criterion 8: numerical Picard-Fuchs check ----

fn round_bits(x: &Rational) -> Rational {
    let scale = BigInt::one() << WORKING_BITS;
    let n = (x * Rational::from_integer(scale.clone())).round();
    n / Rational::from_integer(scale)
}

fn poly_eval(c: &[Rational], x: &Rational) -> Rational {
    c.iter().rev().fold(Rational::zero(), |acc, a| round_bits(&(acc * x + a)))
}

/// Real roots of `x^5 - 5x - t0` by bisection then Newton.
fn real_roots(t0: &Rational) -> Vec<Rational> {
    let f = [-t0.clone(), qq(-5, 1), qq(0, 1), qq(0, 1), qq(0, 1), qq(1, 1)];
    let df = [qq(-5, 1), qq(0, 1), qq(0, 1), qq(0, 1), qq(5, 1)];
    let mut roots = Vec::new();
    let grid: Vec<Rational> = (-40..=40).map(|k| qq(k, 16)).collect();
    for w in grid.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if (poly_eval(&f, a) * poly_eval(&f, b)).is_negative() {
            let mut x = (a + b) / qq(2, 1);
            for _ in 0..12 {
                x = round_bits(&(&x - poly_eval(&f, &x) / poly_eval(&df, &x)));
            }
            roots.push(x);
        }
    }
    roots
}

/// Taylor coefficients of the root branch `x(t0 + s)` through `s^k`.
fn root_series(x0: &Rational, k: usize) -> Vec<Rational> {
    // f(x0 + y) - f(x0) = Σ_j e_j y^j with e_j = f^{(j)}(x0)/j!
    let e = [
        qq(0, 1),
        x0.pow(4) * qq(5, 1) - qq(5, 1),
        x0.pow(3) * qq(10, 1),
        x0.pow(2) * qq(10, 1),
        x0 * qq(5, 1),
        qq(1, 1),
    ];
    let mut c = vec![x0.clone(), Rational::zero()];
    c[1] = round_bits(&e[1].recip());
    for m in 2..=k {
        let y: Vec<Rational> = (0..=m).map(|i| if i == 0 || i >= c.len() { Rational::zero() } else { c[i].clone() }).collect();
        let mut pow = y.clone();
        let mut acc = Rational::zero();
        for ej in e.iter().skip(2) {
            pow = series_mul(&pow, &y, m);
            acc += ej * &pow[m];
        }
        c.push(round_bits(&(-acc / &e[1])));
    }
    c
}

fn series_mul(a: &[Rational], b: &[Rational], m: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); m + 1];
    for (i, x) in a.iter().enumerate().take(m + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(m + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out.iter().map(round_bits).collect()
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |a, k| a * qq(k, 1))
}

fn criterion_8() -> Check {
    let c = quintic();
    let eq1 = pfeq(&c, &MultiPoly::one(1), None).map_err(|e| e.to_string())?;
    let order = eq1.order;
    let tol = Rational::new(BigInt::one(), BigInt::from(10).pow((-NUMERIC_TOL_EXP) as u32));
    for t0 in [qq(1, 1), qq(101, 100), qq(99, 100), qq(21, 20)] {
        let roots = real_roots(&t0);
        ensure(roots.len() == 3, format!("expected three real roots at t = {t0}"))?;
        let series: Vec<Vec<Rational>> = roots.iter().map(|r| root_series(r, order + 1)).collect();
        // I(t) = x_a'(t) - x_b'(t); I^{(i)}(t0) = (i+1)! c_{i+1}
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            let mut residual = Rational::zero();
            let mut scale = Rational::zero();
            for i in 0..=order {
                let di = factorial(i + 1) * (&series[a][i + 1] - &series[b][i + 1]);
                let term = eq1.coeffs[i].eval(&t0) * di;
                scale = scale.max(term.abs());
                residual += term;
            }
            ensure(
                residual.abs() <= tol,
                format!("residual {} at t = {t0} exceeds 1e{NUMERIC_TOL_EXP}", residual.abs()),
            )?;
            ensure(scale > qq(1, 1), "degenerate check: all terms tiny")?;
        }
    }
    // sanity: the same sum with a perturbed operator is far from zero
    let roots = real_roots(&qq(1, 1));
    let s0 = root_series(&roots[0], order + 1);
    let s1 = root_series(&roots[1], order + 1);
    let mut wrong = Rational::zero();
    for i in 0..=order {
        let p = eq1.coeffs[i].eval(&qq(1, 1)) + if i == 0 { qq(1, 1) } else { qq(0, 1) };
        wrong += p * factorial(i + 1) * (&s0[i + 1] - &s1[i + 1]);
    }
    ensure(wrong.abs() > tol, "perturbed operator also annihilates the periods")
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("1 quintic okbase/A/S/nablamat/PFeq", criterion_1),
        ("2 triangle full pipeline", criterion_2),
        ("3 cubic pair changebase", criterion_3),
        ("4 quartic basis, dbeta, changebase", criterion_4),
        ("5 randomized property suites", criterion_5),
        ("6 homogeneous permutation bases", criterion_6),
        ("7 transversality and residue killer", criterion_7),
        ("8 numerical Picard-Fuchs", criterion_8),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let start = Instant::now();
        let r = f();
        let secs = start.elapsed().as_secs_f64();
        match &r {
            Ok(()) => println!("criterion {name}: PASS ({secs:.2}s)"),
            Err(e) => {
                println!("criterion {name}: FAIL ({secs:.2}s): {e}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
