//! The full verification sweep over one algebra, with text and JSON reports.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::ar::{enumerate_indecomposables, injective_envelope, is_injective, is_self_injective, tau_inv_once, Catalog, Caps};
use crate::ass::{
    almost_split_defect, almost_split_sequence_h, analyze_middle, corollary_checks, glued_sequence,
    sequence_ending_at_cover, sequence_ending_at_identity, sequence_ending_at_zero_to, sequence_from_radical_inclusion,
    sequence_from_zero_to_projective, HSequence, MiddleClaim,
};
use crate::decompose::is_indecomposable;
use crate::error::{Error, Result};
use crate::module::radical;
use crate::morph::{
    closed_form_applies, is_projective_h, iso_h, tau_h_closed_form, tau_h_once, tau_h_via_t2, ClosedForm, HCatalog,
    MorphObject,
};
use crate::naming::{module_name, object_name};
use crate::quiver::{
    connectedness_check, delta_beta_maps, dynkin_recognition, families_of, functor_identities, gamma_h,
    mesh_complete, nakayama_fixes_all, orbit_disagreements, periodicity, stability_check, stable_quiver,
    truncated_polynomial_family,
};

pub const SCHEMA: &str = "hmorph.report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub section: &'static str,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub algebra: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(algebra: &str) -> Report {
        Report { schema: SCHEMA, algebra: algebra.to_string(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "algebra: {}", self.algebra);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            let _ = writeln!(s, "[{tag}] {}: {}", c.section, c.name);
            if !c.detail.is_empty() {
                let _ = writeln!(s, "       {}", c.detail);
            }
        }
        let total = self.checks.len();
        let skipped = self.checks.iter().filter(|c| c.status == Status::Skip).count();
        let _ = writeln!(s, "{} checks, {} failed, {} skipped", total, self.failures(), skipped);
        s
    }

    fn push(&mut self, section: &'static str, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.checks.push(Check { section, name: name.into(), status, detail: detail.into() });
    }

    fn record(&mut self, section: &'static str, name: impl Into<String>, outcome: Result<(bool, String)>) {
        let (status, detail) = match outcome {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(e) => (Status::Fail, e.to_string()),
        };
        self.push(section, name, status, detail);
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    pub caps: Caps,
    /// Dimension cap for objects of `T_2`; knitting an infinite-type `T_2`
    /// grows steeply with this.
    pub h_max_dim: usize,
    pub period_bound: usize,
    pub orbit_bound: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { caps: Caps::default(), h_max_dim: 32, period_bound: 24, orbit_bound: 8 }
    }
}

pub const QUIVER: &str = "stable quiver";
pub const PERIODS: &str = "periodicity";
pub const TRANSLATES: &str = "translates";
pub const SEQUENCES: &str = "sequences";
pub const MIDDLE: &str = "middle terms";
pub const ORBITS: &str = "orbits";

/// Run every check that applies to `alg`.
pub fn check_paper(alg: &Algebra, opts: SweepOptions) -> Result<Report> {
    let mut r = Report::new(alg.name());
    let self_inj = is_self_injective(alg)?;
    let cat = enumerate_indecomposables(alg, opts.caps)?;
    let h_caps = Caps { max_dim: opts.caps.max_dim.min(opts.h_max_dim), ..opts.caps };
    let hcat = match HCatalog::build(alg, h_caps) {
        Ok(h) => Some(h),
        Err(Error::CapExceeded(why)) => {
            r.push(
                "catalog",
                "indecomposables of H",
                Status::Skip,
                format!("H is not representation-finite within the caps ({why}); checks needing it are skipped"),
            );
            None
        }
        Err(e) => return Err(e),
    };
    if alg.num_vertices() == 1 && alg.arrows().len() == 1 {
        periodicity_checks(&mut r, alg, opts);
    }
    if let Some(h) = &hcat {
        if self_inj {
            quiver_checks(&mut r, h);
        } else {
            r.push(QUIVER, "stability and connectedness", Status::Skip, "algebra is not self-injective");
        }
        translate_checks(&mut r, h);
        sequence_checks(&mut r, &cat, h);
        if self_inj {
            middle_checks(&mut r, &cat, h);
            orbit_checks(&mut r, &cat, h, opts);
        } else {
            r.push(MIDDLE, "middle-term claims", Status::Skip, "algebra is not self-injective");
            r.push(ORBITS, "orbit closed forms", Status::Skip, "algebra is not self-injective");
        }
    }
    Ok(r)
}

pub fn quiver_checks(r: &mut Report, h: &HCatalog) {
    let g = match gamma_h(h) {
        Ok(g) => g,
        Err(e) => return r.push(QUIVER, "knitting", Status::Fail, e.to_string()),
    };
    r.push(QUIVER, "AR quiver of H", Status::Pass, format!("{} vertices", g.len()));
    r.record(QUIVER, "mesh completeness of Γ_H", Ok((mesh_complete(&g), String::new())));
    let s = stable_quiver(&g);
    let mut labels = s.labels.clone();
    labels.sort();
    r.push(QUIVER, "stable vertices", Status::Pass, format!("{}: {}", s.len(), labels.join(" ")));
    r.record(QUIVER, "every stable vertex is stable", Ok((stability_check(&s), String::new())));
    r.record(QUIVER, "stable quiver is connected", Ok((connectedness_check(&s), String::new())));
    r.record(
        QUIVER,
        "Dynkin type",
        dynkin_recognition(&s).map(|d| {
            let detail = format!(
                "{} (τ-orbit sizes {:?})",
                d.dynkin.as_deref().unwrap_or("not recognised"),
                d.orbit_sizes
            );
            (d.dynkin.is_some(), detail)
        }),
    );
}

pub fn periodicity_checks(r: &mut Report, alg: &Algebra, opts: SweepOptions) {
    let family = match truncated_polynomial_family(alg) {
        Ok(f) => f,
        Err(e) => return r.push(PERIODS, "truncated polynomial objects", Status::Fail, e.to_string()),
    };
    for (i, x) in family {
        let name = format!("{} with U = k[x]/(x^{i})", object_name(&x));
        let outcome = periodicity(&x, opts.period_bound).and_then(|p| {
            let four = crate::morph::tau_h(&x, 4)?;
            let fixed = iso_h(&four, &x)?;
            let detail = match p {
                Some(4) => "least period 4".to_string(),
                Some(p) if 4 % p == 0 => format!("least period {p}, a strict divisor of 4"),
                Some(p) => format!("least period {p}"),
                None => format!("no period up to {}", opts.period_bound),
            };
            Ok((fixed, detail))
        });
        r.record(PERIODS, name, outcome);
    }
}

fn nonprojective_objects(h: &HCatalog) -> Result<Vec<&MorphObject>> {
    let mut out = Vec::new();
    for (i, x) in h.objects.iter().enumerate() {
        if !h.t2.projective[i] {
            debug_assert!(!is_projective_h(x)?);
            out.push(x);
        }
    }
    Ok(out)
}

pub fn translate_checks(r: &mut Report, h: &HCatalog) {
    let outcome = (|| -> Result<(bool, String)> {
        let xs = nonprojective_objects(h)?;
        let mut bad = Vec::new();
        let mut closed = 0;
        for x in &xs {
            let native = tau_h_once(x)?;
            if !iso_h(&native, &tau_h_via_t2(x)?)? {
                bad.push(format!("{} (T2 route)", object_name(x)));
            }
            for form in ClosedForm::ALL {
                if closed_form_applies(x, form)? {
                    closed += 1;
                    if !iso_h(&native, &tau_h_closed_form(x, form)?)? {
                        bad.push(format!("{} ({} form)", object_name(x), form.name()));
                    }
                }
            }
        }
        let detail = if bad.is_empty() {
            format!("{} objects, {} closed-form comparisons", xs.len(), closed)
        } else {
            bad.join("; ")
        };
        Ok((bad.is_empty(), detail))
    })();
    r.record(TRANSLATES, "native, T2 and closed-form τ_H agree", outcome);
}

fn verify(r: &mut Report, h: &HCatalog, name: String, seq: Result<HSequence>) {
    let outcome = seq.and_then(|s| {
        let defect = almost_split_defect(&s, h)?;
        let consistent = iso_h(&tau_h_once(s.target())?, s.source())?;
        Ok(match defect {
            None if consistent => (true, String::new()),
            None => (false, "τ_H of the end term is not the start term".into()),
            Some(d) => (false, d),
        })
    });
    r.record(SEQUENCES, name, outcome);
}

pub fn sequence_checks(r: &mut Report, cat: &Catalog, h: &HCatalog) {
    for (i, seq) in cat.sequences.iter().enumerate() {
        let Some(seq) = seq else { continue };
        let c = module_name(&cat.modules[i]);
        verify(r, h, format!("ending at (0 -> {c})"), sequence_ending_at_zero_to(seq));
        verify(r, h, format!("ending at ({c} = {c})"), sequence_ending_at_identity(seq));
        verify(r, h, format!("ending at the cover of {c}"), sequence_ending_at_cover(&cat.modules[i]));
        let t = cat.tau[i].expect("non-projective has a translate");
        if let Some(prev) = &cat.sequences[t] {
            verify(r, h, format!("glued at {c} and τ{c}"), glued_sequence(seq, prev));
        }
    }
    for (i, m) in cat.modules.iter().enumerate() {
        if !cat.projective[i] {
            continue;
        }
        let name = module_name(m);
        if !cat.injective[i] {
            let j = cat.tau_inv[i].expect("non-injective has an inverse translate");
            let seq = cat.sequences[j].as_ref().expect("sequence recorded");
            verify(r, h, format!("from (rad {name} -> {name})"), sequence_from_radical_inclusion(seq));
        } else {
            verify(r, h, format!("from (0 -> {name})"), sequence_from_zero_to_projective(m));
        }
    }
}

fn claim(r: &mut Report, name: String, seq: Result<HSequence>, c: MiddleClaim) {
    let outcome = seq.and_then(|s| analyze_middle(&s, c)).map(|rep| {
        let parts: Vec<String> = rep
            .summands
            .iter()
            .map(|t| if t.multiplicity == 1 { t.name.clone() } else { format!("{}^{}", t.name, t.multiplicity) })
            .collect();
        (rep.holds, format!("middle: {}", parts.join(" ⊕ ")))
    });
    r.record(MIDDLE, name, outcome);
}

pub fn middle_checks(r: &mut Report, cat: &Catalog, h: &HCatalog) {
    for (i, m) in cat.modules.iter().enumerate() {
        let name = module_name(m);
        if !cat.injective[i] {
            let x = MorphObject::to_zero(m);
            claim(r, format!("ending at ({name} -> 0)"), almost_split_sequence_h(&x), MiddleClaim::EndsAtToZero);
        }
        if !cat.projective[i] {
            claim(r, format!("ending at the cover of {name}"), sequence_ending_at_cover(m), MiddleClaim::EndsAtCover);
            let env = injective_envelope(m).map(|e| MorphObject::new(e.mono));
            claim(
                r,
                format!("ending at the envelope of {name}"),
                env.and_then(|x| almost_split_sequence_h(&x)),
                MiddleClaim::EndsAtEnvelope,
            );
        }
        if cat.projective[i] && cat.injective[i] {
            let rad = radical(m).0;
            let eligible = !rad.is_zero()
                && is_indecomposable(&rad).unwrap_or(false)
                && !is_injective(&rad).unwrap_or(true);
            if eligible {
                let seq = tau_inv_once(&rad).and_then(|c| sequence_ending_at_cover(&c));
                claim(r, format!("(P = P) summand for P = {name}"), seq, MiddleClaim::IdentityFromRadical);
            }
        }
    }
    for (k, x) in h.objects.iter().enumerate() {
        let between = !x.b().is_zero()
            && crate::ar::is_projective(x.a()).unwrap_or(false)
            && crate::ar::is_projective(x.b()).unwrap_or(false)
            && !h.t2.projective[k];
        if between {
            claim(
                r,
                format!("ending at {}", object_name(x)),
                almost_split_sequence_h(x),
                MiddleClaim::EndsBetweenProjectives,
            );
        }
    }
    let outcome = corollary_checks(cat, h).map(|c| {
        let detail = format!(
            "covers/envelopes {}, left/right {}, projective maps {}, τ(P/soc P) ≅ rad P {}",
            c.covers_to_envelopes,
            c.left_to_right,
            c.projective_maps,
            c.radical_translate.map_or("n/a".to_string(), |b| b.to_string())
        );
        (c.all_hold(), detail)
    });
    r.record(MIDDLE, "τ_H correspondences and τ(P/soc P)", outcome);
}

pub fn orbit_checks(r: &mut Report, cat: &Catalog, h: &HCatalog, opts: SweepOptions) {
    let outcome = (|| -> Result<(bool, String)> {
        let mut bad = Vec::new();
        let mut count = 0;
        for x in nonprojective_objects(h)? {
            for fam in families_of(x)? {
                count += 1;
                let d = orbit_disagreements(x, fam, opts.orbit_bound)?;
                if !d.is_empty() {
                    bad.push(format!("{} {}: {:?}", object_name(x), fam.name(), d));
                }
            }
        }
        let detail = if bad.is_empty() {
            format!("{count} orbits, |i| ≤ {}", opts.orbit_bound)
        } else {
            bad.join("; ")
        };
        Ok((bad.is_empty(), detail))
    })();
    r.record(ORBITS, "closed forms match iteration", outcome);

    let outcome = (|| -> Result<(bool, String)> {
        let ids = functor_identities(cat)?;
        let symmetric = nakayama_fixes_all(cat)?;
        let general = ids.iter().all(|f| f.a_matches_nu4_omega6 && f.b_matches_nu2_omega3);
        let sym = !symmetric || ids.iter().all(|f| f.a_matches_omega6 && f.b_matches_omega3);
        let literal = ids.iter().all(|f| f.b_matches_omega3_nu);
        let detail = format!(
            "A ≅ ν⁴Ω⁶ and B ≅ ν²Ω³ on {} modules; ν fixes all: {symmetric}; B ≅ Ω³ν: {literal}",
            ids.len()
        );
        Ok((general && sym, detail))
    })();
    r.record(ORBITS, "stable functor identities", outcome);

    let outcome = delta_beta_maps(cat, h).map(|d| {
        let ok = d.delta.well_defined && d.delta.surjective && d.beta.well_defined && d.beta.surjective;
        (ok, format!("{} A-orbits, {} B-orbits", d.delta.orbits.len(), d.beta.orbits.len()))
    });
    r.record(ORBITS, "component maps well defined and surjective", outcome);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::builtin_algebra;

    #[test]
    fn dual_numbers_pass_everything() {
        let alg = builtin_algebra("x2").unwrap();
        let r = check_paper(&alg, SweepOptions::default()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert!(r.checks.iter().any(|c| c.name == "Dynkin type" && c.detail.starts_with("A3")));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["schema"], SCHEMA);
    }
}
