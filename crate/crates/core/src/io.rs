//! TOML input for algebras, modules and objects of `H`, plus the bundled
//! algebras.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::algebra::{Algebra, AlgebraSpec};
use crate::ar::{injective_envelope, presentation, projective_cover};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::{Module, ModuleMap};
use crate::morph::MorphObject;

/// Bundled algebras as `(name, TOML source)`.
pub const BUILTINS: [(&str, &str); 6] = [
    ("x2", include_str!("../algebras/x2.toml")),
    ("x3", include_str!("../algebras/x3.toml")),
    ("x4", include_str!("../algebras/x4.toml")),
    ("nakayama2", include_str!("../algebras/nakayama2.toml")),
    ("a2", include_str!("../algebras/a2.toml")),
    ("a3", include_str!("../algebras/a3.toml")),
];

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileSpec {
    algebra: AlgebraSpec,
    #[serde(default)]
    modules: BTreeMap<String, ModuleSpec>,
    #[serde(default)]
    objects: BTreeMap<String, ObjectSpec>,
}

/// Dimensions per vertex name; arrow matrices are row-major, target dimension
/// by source dimension. Missing matrices are zero.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub matrices: BTreeMap<String, Vec<Vec<i64>>>,
}

/// `a` and `b` are module references; `f` gives one matrix per vertex.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectSpec {
    pub a: String,
    pub b: String,
    #[serde(default)]
    pub f: BTreeMap<String, Vec<Vec<i64>>>,
}

/// An algebra with the named modules and objects of an input file.
#[derive(Debug, Clone)]
pub struct Workspace {
    pub algebra: Algebra,
    pub modules: BTreeMap<String, Module>,
    pub objects: BTreeMap<String, MorphObject>,
}

pub fn builtin_source(name: &str) -> Option<&'static str> {
    BUILTINS.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Parse a TOML document; errors carry the line and field.
pub fn parse_workspace(text: &str) -> Result<Workspace> {
    let spec: FileSpec = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let algebra = spec.algebra.build()?;
    let mut ws = Workspace { algebra, modules: BTreeMap::new(), objects: BTreeMap::new() };
    for (name, m) in &spec.modules {
        let module = build_module(&ws.algebra, m).map_err(|e| Error::Parse(format!("modules.{name}: {e}")))?;
        ws.modules.insert(name.clone(), module);
    }
    for (name, o) in &spec.objects {
        let obj = build_object(&ws, o).map_err(|e| Error::Parse(format!("objects.{name}: {e}")))?;
        ws.objects.insert(name.clone(), obj);
    }
    Ok(ws)
}

/// `builtin:NAME` or a file path.
pub fn load_workspace(source: &str) -> Result<Workspace> {
    if let Some(name) = source.strip_prefix("builtin:") {
        let text = builtin_source(name).ok_or_else(|| {
            let names: Vec<&str> = BUILTINS.iter().map(|(n, _)| *n).collect();
            Error::Parse(format!("unknown builtin '{name}'; available: {}", names.join(", ")))
        })?;
        return parse_workspace(text);
    }
    let text = std::fs::read_to_string(source).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
    parse_workspace(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{source}: {m}")),
        other => other,
    })
}

pub fn builtin_algebra(name: &str) -> Result<Algebra> {
    Ok(load_workspace(&format!("builtin:{name}"))?.algebra)
}

fn matrix(alg: &Algebra, rows: usize, cols: usize, data: &[Vec<i64>], what: &str) -> Result<Matrix> {
    if data.is_empty() && (rows == 0 || cols == 0) {
        return Ok(Matrix::zeros(alg.field(), rows, cols));
    }
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse(format!("{what} must be {rows}x{cols}")));
    }
    Ok(Matrix::from_rows(alg.field(), data))
}

fn vertex_dims(alg: &Algebra, dims: &BTreeMap<String, usize>) -> Result<Vec<usize>> {
    for v in dims.keys() {
        if alg.vertex_index(v).is_none() {
            return Err(Error::Parse(format!("unknown vertex '{v}'")));
        }
    }
    Ok((0..alg.num_vertices()).map(|v| dims.get(alg.vertex_name(v)).copied().unwrap_or(0)).collect())
}

pub fn build_module(alg: &Algebra, spec: &ModuleSpec) -> Result<Module> {
    let dims = vertex_dims(alg, &spec.dims)?;
    for a in spec.matrices.keys() {
        if alg.arrow_index(a).is_none() {
            return Err(Error::Parse(format!("unknown arrow '{a}'")));
        }
    }
    let mut mats = Vec::new();
    for a in alg.arrows() {
        let (r, c) = (dims[a.to], dims[a.from]);
        mats.push(match spec.matrices.get(&a.name) {
            Some(d) => matrix(alg, r, c, d, &format!("matrix for arrow '{}'", a.name))?,
            None => Matrix::zeros(alg.field(), r, c),
        });
    }
    Module::new(alg, dims, mats)
}

fn build_object(ws: &Workspace, spec: &ObjectSpec) -> Result<MorphObject> {
    let alg = &ws.algebra;
    let a = resolve_module(ws, &spec.a)?;
    let b = resolve_module(ws, &spec.b)?;
    let mut comps = Vec::new();
    for v in spec.f.keys() {
        if alg.vertex_index(v).is_none() {
            return Err(Error::Parse(format!("unknown vertex '{v}'")));
        }
    }
    for v in 0..alg.num_vertices() {
        let (r, c) = (b.dims()[v], a.dims()[v]);
        comps.push(match spec.f.get(alg.vertex_name(v)) {
            Some(d) => matrix(alg, r, c, d, &format!("map at vertex '{}'", alg.vertex_name(v)))?,
            None => Matrix::zeros(alg.field(), r, c),
        });
    }
    Ok(MorphObject::new(ModuleMap::new(&a, &b, comps)?))
}

/// A named module, `0`, or a standard module `S(v)`, `P(v)`, `I(v)`; over a
/// one-vertex algebra also `S`, `P`/`Λ` and `I`.
pub fn resolve_module(ws: &Workspace, name: &str) -> Result<Module> {
    let alg = &ws.algebra;
    let name = name.trim();
    if let Some(m) = ws.modules.get(name) {
        return Ok(m.clone());
    }
    if name == "0" {
        return Ok(Module::zero(alg));
    }
    let single = alg.num_vertices() == 1;
    match name {
        "S" if single => return Ok(Module::simple(alg, 0)),
        "P" | "Λ" | "L" if single => return Ok(Module::projective(alg, 0)),
        "I" if single => return Ok(Module::injective(alg, 0)),
        _ => {}
    }
    let parsed = name
        .strip_suffix(')')
        .and_then(|s| s.split_once('('))
        .and_then(|(kind, v)| alg.vertex_index(v.trim()).map(|v| (kind.trim(), v)));
    match parsed {
        Some(("S", v)) => Ok(Module::simple(alg, v)),
        Some(("P", v)) => Ok(Module::projective(alg, v)),
        Some(("I", v)) => Ok(Module::injective(alg, v)),
        _ => Err(Error::Parse(format!("unknown module '{name}'"))),
    }
}

/// A named object, or one of `0->M`, `M->0`, `M=M`, `cover:M`,
/// `envelope:M`, `pres:M`.
pub fn resolve_object(ws: &Workspace, text: &str) -> Result<MorphObject> {
    let text = text.trim();
    if let Some(x) = ws.objects.get(text) {
        return Ok(x.clone());
    }
    let stripped = text.trim_start_matches('(').trim_end_matches(')');
    if let Some(m) = stripped.strip_prefix("cover:") {
        return Ok(MorphObject::new(projective_cover(&resolve_module(ws, m)?)?.epi));
    }
    if let Some(m) = stripped.strip_prefix("envelope:") {
        return Ok(MorphObject::new(injective_envelope(&resolve_module(ws, m)?)?.mono));
    }
    if let Some(m) = stripped.strip_prefix("pres:") {
        return Ok(MorphObject::new(presentation(&resolve_module(ws, m)?)?.map()));
    }
    if let Some((l, r)) = stripped.split_once("->").or_else(|| stripped.split_once('→')) {
        let (l, r) = (l.trim(), r.trim());
        return match (l, r) {
            ("0", m) => Ok(MorphObject::zero_to(&resolve_module(ws, m)?)),
            (m, "0") => Ok(MorphObject::to_zero(&resolve_module(ws, m)?)),
            _ => Err(Error::Parse(format!("object '{text}': only 0->M and M->0 are inline arrows"))),
        };
    }
    if let Some((l, r)) = stripped.split_once('=') {
        if l.trim() != r.trim() {
            return Err(Error::Parse(format!("object '{text}': both sides of '=' must agree")));
        }
        return Ok(MorphObject::identity(&resolve_module(ws, l)?));
    }
    Err(Error::Parse(format!("unknown object '{text}'")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::naming::object_name;

    #[test]
    fn builtins_parse() {
        for (name, _) in BUILTINS {
            let alg = builtin_algebra(name).unwrap();
            assert!(alg.dim() > 0, "{name}");
        }
        assert_eq!(builtin_algebra("x3").unwrap().dim(), 3);
        assert_eq!(builtin_algebra("nakayama2").unwrap().dim(), 4);
    }

    #[test]
    fn modules_and_objects_from_toml() {
        let text = r#"
[algebra]
p = 2
vertices = ["1"]
arrows = [{ name = "x", from = "1", to = "1" }]
relations = ["x*x"]
bound = 2

[modules.U]
dims = { "1" = 2 }
matrices = { x = [[0, 0], [1, 0]] }

[objects.f]
a = "U"
b = "U"
f = { "1" = [[0, 0], [1, 0]] }
"#;
        let ws = parse_workspace(text).unwrap();
        assert_eq!(ws.modules["U"].dim(), 2);
        assert_eq!(object_name(&ws.objects["f"]), "(Λ -> Λ)_f");
        assert_eq!(object_name(&resolve_object(&ws, "0->S").unwrap()), "(0 -> S)");
        assert_eq!(object_name(&resolve_object(&ws, "(S=S)").unwrap()), "(S = S)_1");
        assert_eq!(object_name(&resolve_object(&ws, "cover:S").unwrap()), "(Λ -> S)_p");
        assert_eq!(object_name(&resolve_object(&ws, "envelope:S").unwrap()), "(S -> Λ)_i");
    }

    #[test]
    fn errors_name_the_field() {
        let bad = "[algebra]\np = 2\nvertices = [\"1\"]\nbound = \"two\"\n";
        let e = parse_workspace(bad).unwrap_err().to_string();
        assert!(e.contains("line 4"), "{e}");
        let text = "[algebra]\np = 2\nvertices = [\"1\"]\narrows = [{ name = \"x\", from = \"1\", to = \"1\" }]\nrelations = [\"x*x\"]\nbound = 2\n[modules.M]\ndims = { \"1\" = 1 }\nmatrices = { x = [[1]] }\n";
        let e = parse_workspace(text).unwrap_err().to_string();
        assert!(e.contains("modules.M") && e.contains("relation"), "{e}");
    }
}
