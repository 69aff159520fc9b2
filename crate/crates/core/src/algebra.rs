//! Bound quiver algebras `kQ/I` over a prime field.
//!
//! Paths are stored in traversal order (first arrow first). The product
//! `mult(x, y)` is the composite "first `y`, then `x`", so it is nonzero only
//! when `y` ends where `x` starts. With this convention left modules are
//! representations of `Q` and `P(v)` is spanned by the paths leaving `v`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Fp, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { start: v, end: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

/// A linear combination of parallel paths.
pub type Relation = Vec<(u32, Path)>;

/// Sparse coordinate vector over the path basis.
pub type Sparse = Vec<(usize, u32)>;

/// User-facing algebra description, with vertices and arrows named.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    #[serde(default)]
    pub name: String,
    pub p: u32,
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
    /// Signed path words such as `"x*x"` or `"a*b - c*d"`; arrows are listed
    /// in traversal order.
    #[serde(default)]
    pub relations: Vec<String>,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub from: String,
    pub to: String,
}

struct AlgebraData {
    name: String,
    field: Fp,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<Relation>,
    bound: usize,
    basis: Vec<Path>,
    lookup: HashMap<Path, Sparse>,
    mult: Vec<Sparse>,
    idempotents: Vec<usize>,
    arrow_basis: Vec<usize>,
    t2: OnceLock<Algebra>,
}

/// A finite-dimensional bound quiver algebra together with its opposite.
///
/// Cloning is cheap. Two handles compare equal iff they refer to the same
/// constructed algebra; `a.opposite().opposite() == a` holds by construction.
#[derive(Clone)]
pub struct Algebra {
    this: Arc<AlgebraData>,
    other: Arc<AlgebraData>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.this, &other.this)
    }
}
impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {} over F{})", self.this.name, self.dim(), self.this.field.p())
    }
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<Algebra> {
        let field = Fp::new(self.p)?;
        let mut vindex = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if vindex.insert(v.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate vertex '{v}'")));
            }
        }
        let mut arrows = Vec::new();
        let mut aindex = HashMap::new();
        for a in &self.arrows {
            let from = *vindex
                .get(&a.from)
                .ok_or_else(|| Error::Parse(format!("arrow '{}' starts at unknown vertex '{}'", a.name, a.from)))?;
            let to = *vindex
                .get(&a.to)
                .ok_or_else(|| Error::Parse(format!("arrow '{}' ends at unknown vertex '{}'", a.name, a.to)))?;
            if aindex.insert(a.name.clone(), arrows.len()).is_some() {
                return Err(Error::Parse(format!("duplicate arrow '{}'", a.name)));
            }
            arrows.push(Arrow { name: a.name.clone(), from, to });
        }
        let mut relations = Vec::new();
        for (ri, text) in self.relations.iter().enumerate() {
            let terms = parse_relation(text).map_err(|e| Error::Parse(format!("relation {}: {e}", ri + 1)))?;
            let mut rel = Vec::new();
            for (c, word) in terms {
                let mut ids = Vec::new();
                for w in &word {
                    ids.push(*aindex.get(w).ok_or_else(|| {
                        Error::Parse(format!("relation {}: unknown arrow '{w}'", ri + 1))
                    })?);
                }
                let path = compose_path(&arrows, &ids)
                    .ok_or_else(|| Error::Parse(format!("relation {}: '{}' is not a path", ri + 1, word.join("*"))))?;
                let c = field.reduce(c);
                if c != 0 {
                    rel.push((c, path));
                }
            }
            relations.push(rel);
        }
        let name = if self.name.is_empty() { "Λ".to_string() } else { self.name.clone() };
        Algebra::from_parts(name, field, self.vertices.clone(), arrows, relations, self.bound)
    }
}

fn compose_path(arrows: &[Arrow], ids: &[usize]) -> Option<Path> {
    let first = ids.first()?;
    let start = arrows[*first].from;
    let mut end = start;
    for &a in ids {
        if arrows[a].from != end {
            return None;
        }
        end = arrows[a].to;
    }
    Some(Path { start, end, arrows: ids.to_vec() })
}

/// Parse `"2*a*b - c*d + e*f"` into coefficient/word pairs. A leading integer
/// factor is read as the coefficient.
pub fn parse_relation(text: &str) -> std::result::Result<Vec<(i64, Vec<String>)>, String> {
    fn term(t: &str, sign: i64) -> std::result::Result<(i64, Vec<String>), String> {
        let t = t.trim();
        if t.is_empty() {
            return Err("dangling sign".into());
        }
        let mut coef = sign;
        let mut word = Vec::new();
        for (i, factor) in t.split('*').map(str::trim).enumerate() {
            if factor.is_empty() {
                return Err(format!("empty factor in '{t}'"));
            }
            if i == 0 {
                if let Ok(n) = factor.parse::<i64>() {
                    coef *= n;
                    continue;
                }
            }
            if factor.chars().any(char::is_whitespace) {
                return Err(format!("malformed factor '{factor}'"));
            }
            word.push(factor.to_string());
        }
        if word.is_empty() {
            return Err(format!("term '{t}' has no arrows"));
        }
        Ok((coef, word))
    }

    let mut terms = Vec::new();
    let mut sign = 1i64;
    let mut leading_sign = false;
    let mut current = String::new();
    for ch in text.chars() {
        if ch == '+' || ch == '-' {
            if current.trim().is_empty() {
                if leading_sign || !terms.is_empty() {
                    return Err("dangling sign".into());
                }
                leading_sign = true;
            } else {
                terms.push(term(&current, sign)?);
                current.clear();
            }
            sign = if ch == '-' { -1 } else { 1 };
        } else {
            current.push(ch);
        }
    }
    terms.push(term(&current, sign)?);
    Ok(terms)
}

impl Algebra {
    /// Build from index-level data. Relation terms must have length at least
    /// two, be parallel within a relation, and every path of length `bound`
    /// must lie in the ideal.
    pub fn from_parts(
        name: String,
        field: Fp,
        vertices: Vec<String>,
        arrows: Vec<Arrow>,
        relations: Vec<Relation>,
        bound: usize,
    ) -> Result<Algebra> {
        let n = vertices.len();
        if n == 0 {
            return Err(Error::Parse("algebra has no vertices".into()));
        }
        if bound == 0 || (!arrows.is_empty() && bound < 2) {
            return Err(Error::NotAdmissible(format!("bound {bound} too small: arrows must survive")));
        }
        for a in &arrows {
            if a.from >= n || a.to >= n {
                return Err(Error::Parse(format!("arrow '{}' has an endpoint out of range", a.name)));
            }
        }
        for (ri, rel) in relations.iter().enumerate() {
            let Some((_, first)) = rel.first() else { continue };
            for (_, path) in rel {
                if path.len() < 2 {
                    return Err(Error::NotAdmissible(format!(
                        "relation {} has a term of length {} (must be at least 2)",
                        ri + 1,
                        path.len()
                    )));
                }
                if path.start != first.start || path.end != first.end {
                    return Err(Error::NotAdmissible(format!("relation {} mixes non-parallel paths", ri + 1)));
                }
            }
        }

        // All paths of length <= bound, grouped by length.
        let mut by_len: Vec<Vec<Path>> = vec![(0..n).map(Path::trivial).collect()];
        for len in 1..=bound {
            let mut next = Vec::new();
            for p in &by_len[len - 1] {
                for (ai, a) in arrows.iter().enumerate() {
                    if a.from == p.end {
                        let mut arrows_p = p.arrows.clone();
                        arrows_p.push(ai);
                        next.push(Path { start: p.start, end: a.to, arrows: arrows_p });
                    }
                }
            }
            if next.len() > 20_000 {
                return Err(Error::NotAdmissible("path space too large for the declared bound".into()));
            }
            by_len.push(next);
        }
        // Column order: longest paths first.
        let mut columns: Vec<Path> = Vec::new();
        for len in (0..=bound).rev() {
            columns.extend(by_len[len].iter().cloned());
        }
        let col_of: HashMap<&Path, usize> = columns.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let top_count = by_len[bound].len();

        // Ideal generators p * r * q, truncated above the bound.
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for rel in &relations {
            let Some((_, head)) = rel.first() else { continue };
            let min_len = rel.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
            for lp in 0..=bound.saturating_sub(min_len) {
                for pre in by_len[lp].iter().filter(|p| p.end == head.start) {
                    for lq in 0..=bound.saturating_sub(min_len + lp) {
                        for post in by_len[lq].iter().filter(|q| q.start == head.end) {
                            let mut row = vec![0u32; columns.len()];
                            let mut nonzero = false;
                            for (c, path) in rel {
                                let total = lp + path.len() + lq;
                                if total > bound {
                                    continue;
                                }
                                let mut ids = pre.arrows.clone();
                                ids.extend_from_slice(&path.arrows);
                                ids.extend_from_slice(&post.arrows);
                                let full = Path { start: pre.start, end: post.end, arrows: ids };
                                let col = col_of[&full];
                                row[col] = field.add(row[col], *c);
                                nonzero = true;
                            }
                            if nonzero {
                                rows.push(row);
                            }
                        }
                    }
                }
            }
        }
        let ideal = if rows.is_empty() {
            Matrix::zeros(field, 0, columns.len())
        } else {
            Matrix::from_flat(field, rows.len(), columns.len(), rows.concat())
        };
        let lower = ideal.submatrix(0..ideal.rows(), top_count..columns.len());
        let in_top = ideal.rank() - lower.rank();
        if in_top != top_count {
            return Err(Error::NotAdmissible(format!(
                "only {in_top} of {top_count} paths of length {bound} lie in the relation ideal; \
                 the quotient is larger than the declared bound allows"
            )));
        }

        // Basis: non-pivot columns of the truncated ideal.
        let (red, pivots) = lower.rref();
        let lower_cols = &columns[top_count..];
        let mut is_pivot = vec![false; lower_cols.len()];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis: Vec<Path> = Vec::new();
        for len in 0..bound {
            for p in &by_len[len] {
                if !is_pivot[col_of[p] - top_count] {
                    basis.push(p.clone());
                }
            }
        }
        let bidx: HashMap<&Path, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut lookup: HashMap<Path, Sparse> = HashMap::new();
        for (i, p) in basis.iter().enumerate() {
            lookup.insert(p.clone(), vec![(i, 1)]);
        }
        for (r, &pc) in pivots.iter().enumerate() {
            let path = &lower_cols[pc];
            let mut coords = Vec::new();
            for (c, col_path) in lower_cols.iter().enumerate() {
                let v = red.get(r, c);
                if v != 0 && !is_pivot[c] {
                    coords.push((bidx[col_path], field.neg(v)));
                }
            }
            coords.sort_unstable();
            lookup.insert(path.clone(), coords);
        }

        let dim = basis.len();
        let mut mult = vec![Vec::new(); dim * dim];
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                if y.end != x.start || x.len() + y.len() >= bound {
                    continue;
                }
                let mut ids = y.arrows.clone();
                ids.extend_from_slice(&x.arrows);
                let prod = Path { start: y.start, end: x.end, arrows: ids };
                mult[i * dim + j] = lookup[&prod].clone();
            }
        }
        let idempotents: Vec<usize> = (0..n).map(|v| bidx[&Path::trivial(v)]).collect();
        let mut arrow_basis = Vec::new();
        for (ai, a) in arrows.iter().enumerate() {
            let p = Path { start: a.from, end: a.to, arrows: vec![ai] };
            arrow_basis.push(*bidx.get(&p).ok_or_else(|| {
                Error::NotAdmissible(format!("arrow '{}' lies in the relation ideal", a.name))
            })?);
        }

        // Opposite: same basis indices, reversed paths.
        let rev = |p: &Path| -> Path {
            let mut a = p.arrows.clone();
            a.reverse();
            Path { start: p.end, end: p.start, arrows: a }
        };
        let op_arrows: Vec<Arrow> =
            arrows.iter().map(|a| Arrow { name: a.name.clone(), from: a.to, to: a.from }).collect();
        let op_relations: Vec<Relation> =
            relations.iter().map(|r| r.iter().map(|(c, p)| (*c, rev(p))).collect()).collect();
        let op_basis: Vec<Path> = basis.iter().map(rev).collect();
        let op_lookup: HashMap<Path, Sparse> = lookup.iter().map(|(p, s)| (rev(p), s.clone())).collect();
        let mut op_mult = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                op_mult[i * dim + j] = mult[j * dim + i].clone();
            }
        }
        let op_name = if let Some(stripped) = name.strip_suffix("^op") {
            stripped.to_string()
        } else {
            format!("{name}^op")
        };

        let this = Arc::new(AlgebraData {
            name,
            field,
            vertices: vertices.clone(),
            arrows,
            relations,
            bound,
            basis,
            lookup,
            mult,
            idempotents: idempotents.clone(),
            arrow_basis: arrow_basis.clone(),
            t2: OnceLock::new(),
        });
        let other = Arc::new(AlgebraData {
            name: op_name,
            field,
            vertices,
            arrows: op_arrows,
            relations: op_relations,
            bound,
            basis: op_basis,
            lookup: op_lookup,
            mult: op_mult,
            idempotents,
            arrow_basis,
            t2: OnceLock::new(),
        });
        Ok(Algebra { this, other })
    }

    pub fn opposite(&self) -> Algebra {
        Algebra { this: self.other.clone(), other: self.this.clone() }
    }

    pub fn name(&self) -> &str {
        &self.this.name
    }
    pub fn field(&self) -> Fp {
        self.this.field
    }
    pub fn num_vertices(&self) -> usize {
        self.this.vertices.len()
    }
    pub fn vertex_name(&self, v: usize) -> &str {
        &self.this.vertices[v]
    }
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.this.vertices.iter().position(|v| v == name)
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.this.arrows
    }
    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.this.arrows.iter().position(|a| a.name == name)
    }
    pub fn relations(&self) -> &[Relation] {
        &self.this.relations
    }
    pub fn bound(&self) -> usize {
        self.this.bound
    }
    pub fn dim(&self) -> usize {
        self.this.basis.len()
    }
    pub fn basis(&self) -> &[Path] {
        &self.this.basis
    }
    /// `basis[i] * basis[j]` (first `j`, then `i`).
    pub fn mult(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.this.mult[i * self.dim() + j]
    }
    pub fn idempotent(&self, v: usize) -> usize {
        self.this.idempotents[v]
    }
    pub fn arrow_basis(&self, a: usize) -> usize {
        self.this.arrow_basis[a]
    }

    /// Coordinates of an arbitrary path; zero when the path is too long.
    pub fn reduce(&self, path: &Path) -> Sparse {
        if path.len() >= self.bound() {
            return Vec::new();
        }
        self.this.lookup.get(path).cloned().unwrap_or_default()
    }

    /// Basis indices of paths from `u` to `v`, in basis order.
    pub fn paths_between(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.this.basis[i].start == u && self.this.basis[i].end == v).collect()
    }

    /// Basis indices of paths starting at `u`.
    pub fn paths_from(&self, u: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.this.basis[i].start == u).collect()
    }

    /// Multiply two dense coordinate vectors.
    pub fn mul_elements(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field();
        let n = self.dim();
        let mut out = vec![0u32; n];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in self.mult(i, j) {
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        out
    }

    pub fn path_label(&self, i: usize) -> String {
        let p = &self.this.basis[i];
        if p.is_trivial() {
            format!("e{}", self.vertex_name(p.start))
        } else {
            p.arrows.iter().map(|&a| self.this.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    /// `true` when the arrow ideal is zero (a product of copies of the field).
    pub fn is_semisimple(&self) -> bool {
        self.dim() == self.num_vertices()
    }

    /// The underlying quiver is connected (as an undirected graph).
    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in self.arrows() {
                for (x, y) in [(a.from, a.to), (a.to, a.from)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The triangular matrix algebra `T2(Λ)`, whose modules are the objects
    /// `(A -> B)` of the morphism category.
    ///
    /// Index scheme: vertex `v` of the first copy is `v`, of the second copy
    /// `v + n`; arrow `a` has copies `a` and `a + m`; the connector at `v` is
    /// arrow `2m + v`, pointing from the first copy to the second.
    pub fn t2(&self) -> &Algebra {
        self.this.t2.get_or_init(|| self.build_t2().expect("T2 of an admissible algebra is admissible"))
    }

    fn build_t2(&self) -> Result<Algebra> {
        let n = self.num_vertices();
        let m = self.arrows().len();
        let mut vertices = Vec::with_capacity(2 * n);
        for copy in ["1", "2"] {
            for v in &self.this.vertices {
                vertices.push(format!("{v}.{copy}"));
            }
        }
        let mut arrows = Vec::with_capacity(2 * m + n);
        for (copy, shift) in [("1", 0), ("2", n)] {
            for a in self.arrows() {
                arrows.push(Arrow { name: format!("{}.{copy}", a.name), from: a.from + shift, to: a.to + shift });
            }
        }
        for v in 0..n {
            arrows.push(Arrow { name: format!("f@{}", self.vertex_name(v)), from: v, to: v + n });
        }
        let shift_path = |p: &Path, vs: usize, as_: usize| Path {
            start: p.start + vs,
            end: p.end + vs,
            arrows: p.arrows.iter().map(|a| a + as_).collect(),
        };
        let mut relations = Vec::new();
        for (vs, as_) in [(0, 0), (n, m)] {
            for rel in self.relations() {
                relations.push(rel.iter().map(|(c, p)| (*c, shift_path(p, vs, as_))).collect());
            }
        }
        let f = self.field();
        for (ai, a) in self.arrows().iter().enumerate() {
            let lhs = Path { start: a.from, end: a.to + n, arrows: vec![ai, 2 * m + a.to] };
            let rhs = Path { start: a.from, end: a.to + n, arrows: vec![2 * m + a.from, ai + m] };
            relations.push(vec![(1, lhs), (f.neg(1), rhs)]);
        }
        Algebra::from_parts(format!("T2({})", self.name()), f, vertices, arrows, relations, self.bound() + 1)
    }
}
