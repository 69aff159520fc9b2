//! Short human-readable names for indecomposable modules.

use crate::decompose::{decompose, iso_indecomposable};
use crate::module::{radical, Module};
use crate::morph::MorphObject;

/// `S`, `Λ`, `U3` over a one-vertex algebra; `S(v)`, `P(v)`, `I(v)` or the
/// dimension vector otherwise. Assumes `m` is indecomposable.
pub fn module_name(m: &Module) -> String {
    let alg = m.algebra();
    if m.is_zero() {
        return "0".into();
    }
    if alg.num_vertices() == 1 {
        let d = m.dim();
        if d == 1 {
            return "S".into();
        }
        if d == alg.dim() && iso_indecomposable(m, &Module::projective(alg, 0)).unwrap_or(false) {
            return "Λ".into();
        }
        if m.dim() - radical(m).0.dim() == 1 {
            return format!("U{d}");
        }
        return format!("M{d}");
    }
    for v in 0..alg.num_vertices() {
        let name = alg.vertex_name(v);
        if m.dim() == 1 && m.dims()[v] == 1 {
            return format!("S({name})");
        }
        let p = Module::projective(alg, v);
        if p.dims() == m.dims() && iso_indecomposable(&p, m).unwrap_or(false) {
            return format!("P({name})");
        }
        let i = Module::injective(alg, v);
        if i.dims() == m.dims() && iso_indecomposable(&i, m).unwrap_or(false) {
            return format!("I({name})");
        }
    }
    let dims: Vec<String> = m.dims().iter().map(usize::to_string).collect();
    format!("M[{}]", dims.join(","))
}

/// Name of an arbitrary module as a sum of indecomposables, e.g. `S⊕Λ^2`.
pub fn module_label(m: &Module) -> String {
    if m.is_zero() {
        return "0".into();
    }
    match decompose(m) {
        Ok(parts) if parts.len() == 1 && parts[0].1 == 1 => module_name(&parts[0].0),
        Ok(mut parts) => {
            parts.sort_by_key(|(x, _)| (x.dim(), x.dims().to_vec()));
            parts
                .iter()
                .map(|(x, k)| if *k == 1 { module_name(x) } else { format!("{}^{k}", module_name(x)) })
                .collect::<Vec<_>>()
                .join("⊕")
        }
        Err(_) => format!("M{:?}", m.dims()),
    }
}

/// Subscript describing the map of an object: `1` for isomorphisms, `i` for
/// monomorphisms, `p` for epimorphisms and `f` otherwise.
fn map_tag(x: &MorphObject) -> &'static str {
    let f = x.f();
    if f.is_iso() {
        "1"
    } else if f.is_injective() {
        "i"
    } else if f.is_surjective() {
        "p"
    } else {
        "f"
    }
}

/// Display name such as `(S = S)_1`, `(Λ -> S)_p` or `(0 -> S)`.
pub fn object_name(x: &MorphObject) -> String {
    let a = module_label(x.a());
    let b = module_label(x.b());
    if x.a().is_zero() || x.b().is_zero() {
        format!("({a} -> {b})")
    } else if x.f().is_iso() {
        format!("({a} = {b})_1")
    } else {
        format!("({a} -> {b})_{}", map_tag(x))
    }
}

/// Compact vertex label such as `[SS_1]`, `[ΛS_p]` or `[0S]`.
pub fn short_name(x: &MorphObject) -> String {
    let a = module_label(x.a());
    let b = module_label(x.b());
    if x.a().is_zero() || x.b().is_zero() {
        format!("[{a}{b}]")
    } else {
        format!("[{a}{b}_{}]", map_tag(x))
    }
}
