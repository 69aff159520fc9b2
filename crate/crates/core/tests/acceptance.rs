// One line per acceptance criterion; exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hmorph::algebra::Algebra;
use hmorph::ar::{enumerate_indecomposables, injective_envelope, Caps, Catalog};
use hmorph::ass::{almost_split_defect, almost_split_sequence_h, corollary_checks, HSequence};
use hmorph::decompose::{decompose, same_multiset};
use hmorph::error::Result;
use hmorph::io::builtin_algebra;
use hmorph::linalg::Matrix;
use hmorph::module::{direct_sum, hom_dim, Module, ModuleMap};
use hmorph::morph::{
    closed_form_applies, dual_h, hom_basis_h, hom_dim_h, iso_h, tau_h, tau_h_closed_form, tau_h_once,
    tau_h_via_t2, upsilon, upsilon_map, ClosedForm, HCatalog, MorphMap, MorphObject,
};
use hmorph::naming::object_name;
use hmorph::quiver::{
    connectedness_check, delta_beta_maps, dynkin_recognition, families_of, functor_identities, gamma_h,
    mesh_complete, nakayama_fixes_all, orbit_disagreements, periodicity, stability_check, stable_quiver,
    truncated_polynomial_family,
};
use hmorph::sweep::{middle_checks, sequence_checks, Report, Status};
use hmorph::translation::TranslationQuiver;

/// Bundled self-injective algebras whose morphism category is of finite type.
const SELF_INJECTIVE: [&str; 3] = ["x2", "x3", "nakayama2"];
const ALL_FINITE: [&str; 5] = ["x2", "x3", "nakayama2", "a2", "a3"];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn within(start: Instant, limit: Duration, o: Outcome) -> Outcome {
    let t = start.elapsed();
    let detail = format!("{} [{:.2}s]", o.detail, t.as_secs_f64());
    if t > limit {
        return outcome(false, format!("{detail}, over the {}s budget", limit.as_secs()));
    }
    Outcome { ok: o.ok, detail }
}

struct Fixture {
    key: &'static str,
    alg: Algebra,
    cat: Catalog,
    h: HCatalog,
}

fn fixture(name: &'static str) -> Result<Fixture> {
    let alg = builtin_algebra(name)?;
    let cat = enumerate_indecomposables(&alg, Caps::default())?;
    let h = HCatalog::build(&alg, Caps::default())?;
    Ok(Fixture { key: name, alg, cat, h })
}

fn nonprojective(h: &HCatalog) -> impl Iterator<Item = &MorphObject> {
    h.objects.iter().enumerate().filter(|(i, _)| !h.t2.projective[*i]).map(|(_, x)| x)
}

fn label(g: &TranslationQuiver, l: &str) -> Option<usize> {
    g.labels.iter().position(|x| x == l)
}

fn dual_numbers_stable_quiver() -> Result<Outcome> {
    let alg = builtin_algebra("x2")?;
    let h = HCatalog::build(&alg, Caps::default())?;
    let s = stable_quiver(&gamma_h(&h)?);
    let mut labels = s.labels.clone();
    labels.sort();
    let want = ["[0S]", "[S0]", "[SS_1]", "[SΛ_i]", "[ΛS_p]", "[ΛΛ_f]"];
    if labels != want {
        return Ok(outcome(false, format!("stable vertices {labels:?}")));
    }
    let arrows = [
        ("[S0]", "[ΛS_p]"),
        ("[0S]", "[ΛS_p]"),
        ("[ΛS_p]", "[SS_1]"),
        ("[ΛS_p]", "[ΛΛ_f]"),
        ("[SS_1]", "[SΛ_i]"),
        ("[ΛΛ_f]", "[SΛ_i]"),
        ("[SΛ_i]", "[0S]"),
        ("[SΛ_i]", "[S0]"),
    ];
    let taus = [
        ("[0S]", "[SS_1]"),
        ("[SS_1]", "[S0]"),
        ("[S0]", "[ΛΛ_f]"),
        ("[ΛΛ_f]", "[0S]"),
        ("[ΛS_p]", "[SΛ_i]"),
        ("[SΛ_i]", "[ΛS_p]"),
    ];
    let arrows_ok = s.arrows.len() == arrows.len()
        && arrows.iter().all(|(a, b)| s.has_arrow(label(&s, a).unwrap(), label(&s, b).unwrap()));
    let taus_ok = taus.iter().all(|(a, b)| s.tau[label(&s, a).unwrap()] == label(&s, b));
    let d = dynkin_recognition(&s)?;
    let ty = d.dynkin.clone().unwrap_or_else(|| "unrecognised".into());
    Ok(outcome(
        arrows_ok && taus_ok && ty == "A3",
        format!("6 stable vertices, arrows {arrows_ok}, τ {taus_ok}, type {ty}, orbit sizes {:?}", d.orbit_sizes),
    ))
}

fn truncated_polynomial_periods() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut divisors = Vec::new();
    let mut count = 0;
    for n in [2, 3, 4] {
        let alg = builtin_algebra(&format!("x{n}"))?;
        for (i, x) in truncated_polynomial_family(&alg)? {
            count += 1;
            let fixed = iso_h(&tau_h(&x, 4)?, &x)?;
            let p = periodicity(&x, 24)?;
            let name = format!("n={n} i={i} {}", object_name(&x));
            match p {
                Some(4) if fixed => {}
                Some(p) if fixed && 4 % p == 0 => divisors.push(format!("{name}: {p}")),
                _ => bad.push(format!("{name}: τ⁴ fixes {fixed}, period {p:?}")),
            }
        }
    }
    let mut detail = format!("{count} objects satisfy τ_H⁴ ≅ id");
    if !divisors.is_empty() {
        detail.push_str(&format!("; strict divisors of 4: {}", divisors.join(", ")));
    }
    if !bad.is_empty() {
        detail = bad.join("; ");
    }
    Ok(outcome(bad.is_empty(), detail))
}

fn translate_agreement(fx: &[Fixture]) -> Result<Outcome> {
    let mut bad = Vec::new();
    let (mut objects, mut closed) = (0, 0);
    for f in fx.iter().filter(|f| SELF_INJECTIVE.contains(&f.key)) {
        for x in nonprojective(&f.h) {
            objects += 1;
            let native = tau_h_once(x)?;
            if !iso_h(&native, &tau_h_via_t2(x)?)? {
                bad.push(format!("{}: T2", object_name(x)));
            }
            for form in ClosedForm::ALL {
                if closed_form_applies(x, form)? {
                    closed += 1;
                    if !iso_h(&native, &tau_h_closed_form(x, form)?)? {
                        bad.push(format!("{}: {}", object_name(x), form.name()));
                    }
                }
            }
        }
    }
    let detail = if bad.is_empty() {
        format!("{objects} objects, {closed} closed-form comparisons, 0 disagreements")
    } else {
        bad.join("; ")
    };
    Ok(outcome(bad.is_empty(), detail))
}

fn report_outcome(r: &Report, what: &str) -> Outcome {
    let fails: Vec<String> = r
        .checks
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| format!("{}: {} {}", c.section, c.name, c.detail))
        .collect();
    if fails.is_empty() {
        outcome(true, format!("{} {what} checks", r.checks.len()))
    } else {
        outcome(false, fails.join("; "))
    }
}

fn builders_verified(fx: &[Fixture]) -> Result<Outcome> {
    let mut r = Report::new("builders");
    for f in fx {
        sequence_checks(&mut r, &f.cat, &f.h);
    }
    let mut general = 0;
    let mut bad = Vec::new();
    for f in fx.iter().filter(|f| ["x2", "x3"].contains(&f.key)) {
        for x in nonprojective(&f.h) {
            general += 1;
            if let Some(d) = almost_split_defect(&almost_split_sequence_h(x)?, &f.h)? {
                bad.push(format!("{}: {d}", object_name(x)));
            }
        }
    }
    let mut o = report_outcome(&r, "builder");
    if !bad.is_empty() {
        o = outcome(false, format!("{}; {}", o.detail, bad.join("; ")));
    } else {
        o.detail.push_str(&format!(", {general} sequences via T2"));
    }
    Ok(o)
}

fn middle_terms(fx: &[Fixture]) -> Result<Outcome> {
    let mut r = Report::new("middle");
    for f in fx.iter().filter(|f| SELF_INJECTIVE.contains(&f.key)) {
        middle_checks(&mut r, &f.cat, &f.h);
    }
    let mut o = report_outcome(&r, "middle-term");
    for f in fx.iter().filter(|f| ["x2", "x3"].contains(&f.key)) {
        let c = corollary_checks(&f.cat, &f.h)?;
        if !c.all_hold() || c.radical_translate != Some(true) {
            o = outcome(false, format!("{}; corollaries over {}: {c:?}", o.detail, f.alg.name()));
        }
    }
    Ok(o)
}

fn stable_structure(fx: &[Fixture]) -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut orbits = 0;
    let mut modules = 0;
    for f in fx.iter().filter(|f| SELF_INJECTIVE.contains(&f.key)) {
        let s = stable_quiver(&gamma_h(&f.h)?);
        if !(stability_check(&s) && connectedness_check(&s) && mesh_complete(&s)) {
            bad.push(format!("{}: stable quiver", f.alg.name()));
        }
        for x in nonprojective(&f.h) {
            for fam in families_of(x)? {
                orbits += 1;
                let d = orbit_disagreements(x, fam, 8)?;
                if !d.is_empty() {
                    bad.push(format!("{} {}: {d:?}", object_name(x), fam.name()));
                }
            }
        }
    }
    for name in ["x2", "x3", "x4", "nakayama2"] {
        let alg = builtin_algebra(name)?;
        let cat = enumerate_indecomposables(&alg, Caps::default())?;
        let symmetric = nakayama_fixes_all(&cat)?;
        for id in functor_identities(&cat)? {
            modules += 1;
            let general = id.a_matches_nu4_omega6 && id.b_matches_nu2_omega3;
            let sym = !symmetric || (id.a_matches_omega6 && id.b_matches_omega3);
            if !(general && sym) {
                bad.push(format!("{name}: {id:?}"));
            }
        }
    }
    for f in fx.iter().filter(|f| ["x2", "x3"].contains(&f.key)) {
        let d = delta_beta_maps(&f.cat, &f.h)?;
        if !(d.delta.well_defined && d.delta.surjective && d.beta.well_defined && d.beta.surjective) {
            bad.push(format!("{}: component maps", f.alg.name()));
        }
    }
    let detail = if bad.is_empty() {
        format!("stable and connected; {orbits} orbits with |i| ≤ 8; identities on {modules} modules; δ/β onto")
    } else {
        bad.join("; ")
    };
    Ok(outcome(bad.is_empty(), detail))
}

fn random_invertible(rng: &mut ChaCha8Rng, alg: &Algebra, n: usize) -> Matrix {
    let p = alg.field().p();
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..p) as i64).collect()).collect();
        let m = Matrix::from_rows(alg.field(), &rows);
        if m.is_invertible() {
            return m;
        }
    }
}

/// `m` written in a random basis at every vertex.
fn scramble(rng: &mut ChaCha8Rng, m: &Module) -> Result<Module> {
    let alg = m.algebra();
    let bases: Vec<Matrix> = m.dims().iter().map(|&d| random_invertible(rng, alg, d)).collect();
    let inv: Vec<Matrix> = bases.iter().map(|b| b.inverse().expect("invertible")).collect();
    let arrows = alg
        .arrows()
        .iter()
        .zip(m.arrows())
        .map(|(a, x)| bases[a.to].mul(x).mul(&inv[a.from]))
        .collect();
    Module::new(alg, m.dims().to_vec(), arrows)
}

fn square_commutes(h: &MorphMap) -> bool {
    let (x, y) = (h.source(), h.target());
    let intertwines = ModuleMap::new(x.a(), y.a(), h.h1.comps().to_vec()).is_ok()
        && ModuleMap::new(x.b(), y.b(), h.h2.comps().to_vec()).is_ok();
    intertwines && MorphMap::new(x, y, h.h1.clone(), h.h2.clone()).is_ok()
}

fn foundations(fx: &[Fixture]) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bad = Vec::new();

    let mut duals = 0;
    for f in fx {
        if !(f.alg.opposite().opposite() == f.alg) {
            bad.push(format!("{}: opposite not involutive", f.alg.name()));
        }
        for m in &f.cat.modules {
            duals += 1;
            if !m.dual().dual().same_as(m) {
                bad.push(format!("{}: D D M ≠ M", f.alg.name()));
            }
        }
        for x in &f.h.objects {
            duals += 1;
            if !iso_h(&dual_h(&dual_h(x)), x)? {
                bad.push(format!("D_H D_H {} ≇ it", object_name(x)));
            }
        }
    }

    let mut pairs = 0;
    let pool: Vec<&MorphObject> = fx
        .iter()
        .filter(|f| ["x3", "nakayama2", "a3"].contains(&f.key))
        .flat_map(|f| f.h.objects.iter())
        .collect();
    while pairs < 100 {
        let x = *pool.choose(&mut rng).expect("objects");
        let y = *pool.choose(&mut rng).expect("objects");
        if x.algebra() != y.algebra() {
            continue;
        }
        pairs += 1;
        let basis = hom_basis_h(x, y)?;
        let (ux, uy) = (upsilon(x), upsilon(y));
        if basis.len() != hom_dim(&ux, &uy)? || basis.len() != hom_dim_h(x, y)? {
            bad.push(format!("Hom({}, {}) changes under Υ", object_name(x), object_name(y)));
        }
        if basis.iter().any(|h| ModuleMap::new(&ux, &uy, upsilon_map(h, &ux, &uy).comps().to_vec()).is_err()) {
            bad.push(format!("Υ of a map {} -> {} is not a module map", object_name(x), object_name(y)));
        }
    }

    let mut sums = 0;
    for f in fx {
        for cat in [&f.cat, &f.h.t2] {
            let ms = &cat.modules;
            for i in 0..ms.len() {
                for j in i..ms.len() {
                    sums += 1;
                    let s = direct_sum(&cat.algebra, &[ms[i].clone(), ms[j].clone()])?;
                    let parts = decompose(&scramble(&mut rng, &s.module)?)?;
                    let want = if i == j {
                        vec![(ms[i].clone(), 2)]
                    } else {
                        vec![(ms[i].clone(), 1), (ms[j].clone(), 1)]
                    };
                    if !same_multiset(&parts, &want)? {
                        bad.push(format!("{}: summands {i}+{j} not recovered", f.alg.name()));
                    }
                }
            }
        }
    }

    let mut maps = 0;
    for f in fx {
        for seq in f.cat.sequences.iter().flatten() {
            maps += 2;
            let ok = [&seq.f, &seq.g].iter().all(|h| ModuleMap::new(h.source(), h.target(), h.comps().to_vec()).is_ok());
            if !ok || !seq.is_exact() {
                bad.push(format!("{}: almost split sequence maps", f.alg.name()));
            }
        }
        for x in nonprojective(&f.h) {
            let seq: HSequence = almost_split_sequence_h(x)?;
            maps += 2;
            if !(square_commutes(&seq.left) && square_commutes(&seq.right) && seq.is_exact()) {
                bad.push(format!("sequence ending at {}", object_name(x)));
            }
        }
        for m in &f.cat.modules {
            let env = injective_envelope(m)?;
            maps += 1;
            if ModuleMap::new(env.mono.source(), env.mono.target(), env.mono.comps().to_vec()).is_err() {
                bad.push(format!("{}: envelope map", f.alg.name()));
            }
        }
    }

    let detail = if bad.is_empty() {
        format!("{duals} duals, {pairs} Υ pairs, {sums} scrambled pair sums, {maps} maps re-checked")
    } else {
        bad.join("; ")
    };
    Ok(outcome(bad.is_empty(), detail))
}

fn main() {
    let start = Instant::now();
    let fixtures: Vec<Fixture> = ALL_FINITE.iter().map(|n| fixture(n).expect("bundled algebra")).collect();
    let prep = start.elapsed();

    type Criterion<'a> = (&'a str, Duration, Box<dyn Fn() -> Result<Outcome> + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("stable quiver of H over k[x]/(x²)", Duration::from_secs(10), Box::new(dual_numbers_stable_quiver)),
        ("τ_H-periodicity over k[x]/(xⁿ), n = 2, 3, 4", Duration::from_secs(60), Box::new(truncated_polynomial_periods)),
        ("native, T2 and closed-form τ_H agree", Duration::from_secs(120) + prep, Box::new(|| translate_agreement(&fixtures))),
        ("constructed sequences are almost split", Duration::from_secs(300), Box::new(|| builders_verified(&fixtures))),
        ("middle terms and τ_H correspondences", Duration::from_secs(300), Box::new(|| middle_terms(&fixtures))),
        ("stable components, orbits and stable functors", Duration::from_secs(300), Box::new(|| stable_structure(&fixtures))),
        ("foundations", Duration::from_secs(300), Box::new(|| foundations(&fixtures))),
    ];

    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = match run() {
            Ok(o) => within(t, *limit, o),
            Err(e) => outcome(false, format!("error: {e}")),
        };
        if !o.ok {
            failed += 1;
        }
        println!("criterion {}: {} {name}: {}", k + 1, if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} of {} criteria pass in {:.1}s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
