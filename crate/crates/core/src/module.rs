//! Left modules as quiver representations, and the maps between them.

use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{span_basis, Matrix, Vector};

struct ModuleInner {
    alg: Algebra,
    dims: Vec<usize>,
    arrows: Vec<Matrix>,
}

/// A finite-dimensional left module: a vector space per vertex and a matrix
/// (target dim x source dim) per arrow, satisfying the relations.
#[derive(Clone)]
pub struct Module(Arc<ModuleInner>);

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?} over {}", self.dims(), self.algebra().name())
    }
}

impl Module {
    pub fn new(alg: &Algebra, dims: Vec<usize>, arrows: Vec<Matrix>) -> Result<Module> {
        if dims.len() != alg.num_vertices() {
            return Err(Error::InvalidModule(format!(
                "{} dimensions given for {} vertices",
                dims.len(),
                alg.num_vertices()
            )));
        }
        if arrows.len() != alg.arrows().len() {
            return Err(Error::InvalidModule(format!(
                "{} matrices given for {} arrows",
                arrows.len(),
                alg.arrows().len()
            )));
        }
        for (m, a) in arrows.iter().zip(alg.arrows()) {
            if m.shape() != (dims[a.to], dims[a.from]) {
                return Err(Error::InvalidModule(format!(
                    "arrow '{}' needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.to],
                    dims[a.from],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != alg.field() {
                return Err(Error::InvalidModule("matrix over the wrong field".into()));
            }
        }
        let m = Module(Arc::new(ModuleInner { alg: alg.clone(), dims, arrows }));
        for (ri, rel) in alg.relations().iter().enumerate() {
            let Some((_, head)) = rel.first() else { continue };
            let mut acc = Matrix::zeros(alg.field(), m.dims()[head.end], m.dims()[head.start]);
            for (c, path) in rel {
                acc = acc.add(&m.word_action(&path.arrows, path.start).scale(*c));
            }
            if !acc.is_zero() {
                return Err(Error::InvalidModule(format!("relation {} does not vanish", ri + 1)));
            }
        }
        Ok(m)
    }

    /// Construct without checking relations (debug builds still check).
    pub(crate) fn trusted(alg: &Algebra, dims: Vec<usize>, arrows: Vec<Matrix>) -> Module {
        if cfg!(debug_assertions) {
            return Module::new(alg, dims, arrows).expect("internally constructed module is valid");
        }
        Module(Arc::new(ModuleInner { alg: alg.clone(), dims, arrows }))
    }

    pub fn zero(alg: &Algebra) -> Module {
        let f = alg.field();
        let arrows = alg.arrows().iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        Module::trusted(alg, vec![0; alg.num_vertices()], arrows)
    }

    pub fn simple(alg: &Algebra, v: usize) -> Module {
        let mut dims = vec![0; alg.num_vertices()];
        dims[v] = 1;
        let arrows = alg.arrows().iter().map(|a| Matrix::zeros(alg.field(), dims[a.to], dims[a.from])).collect();
        Module::trusted(alg, dims, arrows)
    }

    pub fn projective(alg: &Algebra, v: usize) -> Module {
        ProjModule::new(alg, vec![v]).module().clone()
    }

    /// `I(v) = D(P(v))` for the projective of the opposite algebra.
    pub fn injective(alg: &Algebra, v: usize) -> Module {
        Module::projective(&alg.opposite(), v).dual()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0.alg
    }
    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }
    pub fn dim(&self) -> usize {
        self.0.dims.iter().sum()
    }
    pub fn arrow(&self, a: usize) -> &Matrix {
        &self.0.arrows[a]
    }
    pub fn arrows(&self) -> &[Matrix] {
        &self.0.arrows
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Offset of each vertex space in the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims().len());
        let mut acc = 0;
        for &d in self.dims() {
            off.push(acc);
            acc += d;
        }
        off
    }

    fn word_action(&self, arrows: &[usize], start: usize) -> Matrix {
        let mut acc = Matrix::identity(self.algebra().field(), self.dims()[start]);
        for &a in arrows {
            acc = self.arrow(a).mul(&acc);
        }
        acc
    }

    /// Action of the basis element `i` of the algebra, from its start vertex
    /// space to its end vertex space.
    pub fn basis_action(&self, i: usize) -> Matrix {
        let p = &self.algebra().basis()[i];
        self.word_action(&p.arrows, p.start)
    }

    /// Action of a basis element on the whole module (total-space matrix).
    pub fn total_action(&self, i: usize) -> Matrix {
        let p = &self.algebra().basis()[i];
        let off = self.offsets();
        let mut out = Matrix::zeros(self.algebra().field(), self.dim(), self.dim());
        out.paste(off[p.end], off[p.start], &self.basis_action(i));
        out
    }

    /// The dual module over the opposite algebra.
    pub fn dual(&self) -> Module {
        let op = self.algebra().opposite();
        let arrows = self.arrows().iter().map(Matrix::transpose).collect();
        Module::trusted(&op, self.dims().to_vec(), arrows)
    }

    pub fn same_algebra(&self, other: &Module) -> Result<()> {
        if self.algebra() != other.algebra() {
            return Err(Error::AlgebraMismatch(format!(
                "{} vs {}",
                self.algebra().name(),
                other.algebra().name()
            )));
        }
        Ok(())
    }

    /// Structural equality: same algebra, dimensions and matrices.
    pub fn same_as(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.algebra() == other.algebra() && self.dims() == other.dims() && self.arrows() == other.arrows())
    }
}

/// A module homomorphism, one matrix per vertex.
#[derive(Clone)]
pub struct ModuleMap {
    src: Module,
    dst: Module,
    comps: Vec<Matrix>,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap{:?}->{:?} {:?}", self.src.dims(), self.dst.dims(), self.comps)
    }
}

impl ModuleMap {
    pub fn new(src: &Module, dst: &Module, comps: Vec<Matrix>) -> Result<ModuleMap> {
        src.same_algebra(dst)?;
        let alg = src.algebra();
        if comps.len() != alg.num_vertices() {
            return Err(Error::InvalidMap("wrong number of vertex components".into()));
        }
        for (v, c) in comps.iter().enumerate() {
            if c.shape() != (dst.dims()[v], src.dims()[v]) {
                return Err(Error::InvalidMap(format!(
                    "component at vertex {} has shape {:?}, expected {:?}",
                    alg.vertex_name(v),
                    c.shape(),
                    (dst.dims()[v], src.dims()[v])
                )));
            }
        }
        for (ai, a) in alg.arrows().iter().enumerate() {
            let lhs = dst.arrow(ai).mul(&comps[a.from]);
            let rhs = comps[a.to].mul(src.arrow(ai));
            if lhs != rhs {
                return Err(Error::InvalidMap(format!("map does not commute with arrow '{}'", a.name)));
            }
        }
        Ok(ModuleMap { src: src.clone(), dst: dst.clone(), comps })
    }

    /// Construct a map known to be valid; checked in debug builds.
    pub(crate) fn trusted(src: &Module, dst: &Module, comps: Vec<Matrix>) -> ModuleMap {
        if cfg!(debug_assertions) {
            return ModuleMap::new(src, dst, comps).expect("internally constructed map is a homomorphism");
        }
        ModuleMap { src: src.clone(), dst: dst.clone(), comps }
    }

    pub(crate) fn from_parts_unchecked(src: &Module, dst: &Module, comps: Vec<Matrix>) -> ModuleMap {
        ModuleMap { src: src.clone(), dst: dst.clone(), comps }
    }

    pub fn zero(src: &Module, dst: &Module) -> ModuleMap {
        let f = src.algebra().field();
        let comps = (0..src.dims().len()).map(|v| Matrix::zeros(f, dst.dims()[v], src.dims()[v])).collect();
        ModuleMap { src: src.clone(), dst: dst.clone(), comps }
    }

    pub fn identity(m: &Module) -> ModuleMap {
        let f = m.algebra().field();
        let comps = m.dims().iter().map(|&d| Matrix::identity(f, d)).collect();
        ModuleMap { src: m.clone(), dst: m.clone(), comps }
    }

    pub fn source(&self) -> &Module {
        &self.src
    }
    pub fn target(&self) -> &Module {
        &self.dst
    }
    pub fn comp(&self, v: usize) -> &Matrix {
        &self.comps[v]
    }
    pub fn comps(&self) -> &[Matrix] {
        &self.comps
    }

    /// `self ∘ first`
    pub fn after(&self, first: &ModuleMap) -> ModuleMap {
        assert_eq!(first.dst.dims(), self.src.dims(), "composing incompatible maps");
        let comps = self.comps.iter().zip(&first.comps).map(|(g, f)| g.mul(f)).collect();
        ModuleMap { src: first.src.clone(), dst: self.dst.clone(), comps }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect();
        ModuleMap { src: self.src.clone(), dst: self.dst.clone(), comps }
    }

    pub fn sub(&self, other: &ModuleMap) -> ModuleMap {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.sub(b)).collect();
        ModuleMap { src: self.src.clone(), dst: self.dst.clone(), comps }
    }

    pub fn scale(&self, s: u32) -> ModuleMap {
        let comps = self.comps.iter().map(|a| a.scale(s)).collect();
        ModuleMap { src: self.src.clone(), dst: self.dst.clone(), comps }
    }

    /// Same matrices, reinterpreted between structurally equal modules.
    pub fn retarget(&self, src: &Module, dst: &Module) -> ModuleMap {
        debug_assert_eq!(src.dims(), self.src.dims());
        debug_assert_eq!(dst.dims(), self.dst.dims());
        ModuleMap::trusted(src, dst, self.comps.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }
    pub fn rank(&self) -> usize {
        self.comps.iter().map(Matrix::rank).sum()
    }
    pub fn is_injective(&self) -> bool {
        self.rank() == self.src.dim()
    }
    pub fn is_surjective(&self) -> bool {
        self.rank() == self.dst.dim()
    }
    pub fn is_iso(&self) -> bool {
        self.src.dims() == self.dst.dims() && self.is_injective()
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<ModuleMap> {
        let mut comps = Vec::new();
        for c in &self.comps {
            comps.push(c.inverse()?);
        }
        Some(ModuleMap::trusted(&self.dst, &self.src, comps))
    }

    /// Block-diagonal matrix on total spaces.
    pub fn total_matrix(&self) -> Matrix {
        let f = self.src.algebra().field();
        let blocks: Vec<&Matrix> = self.comps.iter().collect();
        if blocks.is_empty() {
            return Matrix::zeros(f, 0, 0);
        }
        Matrix::block_diag(f, &blocks)
    }

    /// Flattened coordinates (components concatenated, each row-major).
    pub fn to_vector(&self) -> Vector {
        self.comps.iter().flat_map(|c| c.as_slice().iter().copied()).collect()
    }

    pub fn from_vector(src: &Module, dst: &Module, v: &[u32]) -> ModuleMap {
        let f = src.algebra().field();
        let mut comps = Vec::new();
        let mut pos = 0;
        for (d, s) in dst.dims().iter().zip(src.dims()) {
            comps.push(Matrix::from_flat(f, *d, *s, v[pos..pos + d * s].to_vec()));
            pos += d * s;
        }
        ModuleMap::trusted(src, dst, comps)
    }

    /// `D(f): D(target) -> D(source)`.
    pub fn dual(&self) -> ModuleMap {
        let comps = self.comps.iter().map(Matrix::transpose).collect();
        ModuleMap::trusted(&self.dst.dual(), &self.src.dual(), comps)
    }

    /// Dual between already-dualized modules (avoids rebuilding them).
    pub fn dual_between(&self, dsrc: &Module, ddst: &Module) -> ModuleMap {
        let comps = self.comps.iter().map(Matrix::transpose).collect();
        ModuleMap::trusted(dsrc, ddst, comps)
    }
}

/// Dimension of the space of homomorphisms.
pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    Ok(hom_equations(m, n)?.map_or(0, |(eq, _)| eq.cols() - eq.rank()))
}

fn hom_equations(m: &Module, n: &Module) -> Result<Option<(Matrix, Vec<usize>)>> {
    m.same_algebra(n)?;
    let alg = m.algebra();
    let f = alg.field();
    let mut offs = Vec::new();
    let mut total = 0;
    for v in 0..alg.num_vertices() {
        offs.push(total);
        total += n.dims()[v] * m.dims()[v];
    }
    if total == 0 {
        return Ok(None);
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (ai, a) in alg.arrows().iter().enumerate() {
        let (v, w) = (a.from, a.to);
        let (mv, nv, mw, nw) = (m.dims()[v], n.dims()[v], m.dims()[w], n.dims()[w]);
        let ma = m.arrow(ai);
        let na = n.arrow(ai);
        // (N_a h_v - h_w M_a)[i, j] = 0
        for i in 0..nw {
            for j in 0..mv {
                let mut row = vec![0u32; total];
                for k in 0..nv {
                    let c = na.get(i, k);
                    if c != 0 {
                        let idx = offs[v] + k * mv + j;
                        row[idx] = f.add(row[idx], c);
                    }
                }
                for k in 0..mw {
                    let c = ma.get(k, j);
                    if c != 0 {
                        let idx = offs[w] + i * mw + k;
                        row[idx] = f.sub(row[idx], c);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let eq = if rows.is_empty() {
        Matrix::zeros(f, 0, total)
    } else {
        Matrix::from_flat(f, rows.len(), total, rows.concat())
    };
    Ok(Some((eq, offs)))
}

/// A basis of `Hom(m, n)`.
pub fn hom_basis(m: &Module, n: &Module) -> Result<Vec<ModuleMap>> {
    let Some((eq, _)) = hom_equations(m, n)? else { return Ok(Vec::new()) };
    Ok(eq.kernel_basis().into_iter().map(|v| ModuleMap::from_vector(m, n, &v)).collect())
}

/// Kernel with its inclusion.
pub fn kernel(f: &ModuleMap) -> (Module, ModuleMap) {
    let m = f.source();
    let ks: Vec<Matrix> = f.comps().iter().map(Matrix::kernel_matrix).collect();
    submodule_from_basis(m, ks).expect("kernel is a submodule")
}

/// Image, with the corestriction onto it and its inclusion into the target.
pub fn image(f: &ModuleMap) -> (Module, ModuleMap, ModuleMap) {
    let ims: Vec<Matrix> = f.comps().iter().map(Matrix::image_matrix).collect();
    let (im, incl) = submodule_from_basis(f.target(), ims).expect("image is a submodule");
    let epi = lift_through_mono(&incl, f).expect("map factors through its image");
    (im, epi, incl)
}

/// Cokernel with its projection.
pub fn cokernel(f: &ModuleMap) -> (Module, ModuleMap) {
    let n = f.target();
    let ims: Vec<Matrix> = f.comps().iter().map(Matrix::image_matrix).collect();
    quotient_by_basis(n, &ims)
}

/// `n / U` where `U` is a submodule given by independent column bases.
pub fn quotient_by_basis(n: &Module, sub: &[Matrix]) -> (Module, ModuleMap) {
    let alg = n.algebra();
    let fld = alg.field();
    let mut proj = Vec::new();
    let mut comp = Vec::new();
    for (v, im) in sub.iter().enumerate() {
        let d = n.dims()[v];
        let im = if im.cols() == 0 { Matrix::zeros(fld, d, 0) } else { im.clone() };
        let q = im.complement_columns();
        let q = if q.cols() == 0 { Matrix::zeros(fld, d, 0) } else { q };
        let full = im.hstack(&q);
        let inv = full.inverse().expect("basis extension is invertible");
        proj.push(inv.submatrix(im.cols()..d, 0..d));
        comp.push(q);
    }
    let dims: Vec<usize> = comp.iter().map(Matrix::cols).collect();
    let arrows = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| proj[a.to].mul(n.arrow(ai)).mul(&comp[a.from]))
        .collect();
    let c = Module::trusted(alg, dims, arrows);
    let p = ModuleMap::trusted(n, &c, proj);
    (c, p)
}

/// The submodule spanned by the given independent columns at each vertex.
/// Fails when the spaces are not closed under the arrows.
pub fn submodule_from_basis(m: &Module, basis: Vec<Matrix>) -> Result<(Module, ModuleMap)> {
    let alg = m.algebra();
    let fld = alg.field();
    let basis: Vec<Matrix> = basis
        .into_iter()
        .enumerate()
        .map(|(v, b)| if b.cols() == 0 { Matrix::zeros(fld, m.dims()[v], 0) } else { b })
        .collect();
    let mut arrows = Vec::new();
    for (ai, a) in alg.arrows().iter().enumerate() {
        let img = m.arrow(ai).mul(&basis[a.from]);
        let x = basis[a.to]
            .solve_matrix(&img)
            .ok_or_else(|| Error::InvalidModule(format!("subspace not closed under arrow '{}'", a.name)))?;
        arrows.push(x);
    }
    let dims = basis.iter().map(Matrix::cols).collect();
    let sub = Module::trusted(alg, dims, arrows);
    let incl = ModuleMap::trusted(&sub, m, basis);
    Ok((sub, incl))
}

/// The submodule generated by the given vectors (columns per vertex).
pub fn generated_submodule(m: &Module, gens: &[Vec<Vector>]) -> (Module, ModuleMap) {
    let alg = m.algebra();
    let fld = alg.field();
    let n = alg.num_vertices();
    let mut spans: Vec<Vec<Vector>> = (0..n).map(|v| span_basis(fld, m.dims()[v], &gens[v])).collect();
    loop {
        let mut changed = false;
        for (ai, a) in alg.arrows().iter().enumerate() {
            let imgs: Vec<Vector> = spans[a.from].iter().map(|x| m.arrow(ai).mul_vec(x)).collect();
            let mut all = spans[a.to].clone();
            all.extend(imgs);
            let nb = span_basis(fld, m.dims()[a.to], &all);
            if nb.len() > spans[a.to].len() {
                spans[a.to] = nb;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let basis = (0..n).map(|v| Matrix::from_columns(fld, m.dims()[v], &spans[v])).collect();
    submodule_from_basis(m, basis).expect("closure is a submodule")
}

/// Solve `mono ∘ x = h` for `x`.
pub fn lift_through_mono(mono: &ModuleMap, h: &ModuleMap) -> Result<ModuleMap> {
    let mut comps = Vec::new();
    for (v, (i, hv)) in mono.comps().iter().zip(h.comps()).enumerate() {
        let x = i.solve_matrix(hv).ok_or_else(|| {
            Error::InvalidMap(format!("map does not factor through the monomorphism at vertex {v}"))
        })?;
        comps.push(x);
    }
    Ok(ModuleMap::trusted(h.source(), mono.source(), comps))
}

/// Solve `x ∘ epi = h` for `x` (requires `h` to vanish on the kernel of `epi`).
pub fn factor_through_epi(epi: &ModuleMap, h: &ModuleMap) -> Result<ModuleMap> {
    let mut comps = Vec::new();
    for (v, (p, hv)) in epi.comps().iter().zip(h.comps()).enumerate() {
        let xt = p.transpose().solve_matrix(&hv.transpose()).ok_or_else(|| {
            Error::InvalidMap(format!("map does not factor through the epimorphism at vertex {v}"))
        })?;
        comps.push(xt.transpose());
    }
    Ok(ModuleMap::trusted(epi.target(), h.target(), comps))
}

/// Biproduct with its injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub injections: Vec<ModuleMap>,
    pub projections: Vec<ModuleMap>,
}

pub fn direct_sum(alg: &Algebra, ms: &[Module]) -> Result<DirectSum> {
    for m in ms {
        if m.algebra() != alg {
            return Err(Error::AlgebraMismatch("direct sum of modules over different algebras".into()));
        }
    }
    let fld = alg.field();
    let nv = alg.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|v| ms.iter().map(|m| m.dims()[v]).sum()).collect();
    let arrows = (0..alg.arrows().len())
        .map(|ai| {
            let a = &alg.arrows()[ai];
            let mut out = Matrix::zeros(fld, dims[a.to], dims[a.from]);
            let (mut r, mut c) = (0, 0);
            for m in ms {
                out.paste(r, c, m.arrow(ai));
                r += m.dims()[a.to];
                c += m.dims()[a.from];
            }
            out
        })
        .collect();
    let sum = Module::trusted(alg, dims.clone(), arrows);
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offs = vec![0usize; nv];
    for m in ms {
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for v in 0..nv {
            let mut i = Matrix::zeros(fld, dims[v], m.dims()[v]);
            i.paste(offs[v], 0, &Matrix::identity(fld, m.dims()[v]));
            proj.push(i.transpose());
            inj.push(i);
            offs[v] += m.dims()[v];
        }
        injections.push(ModuleMap::trusted(m, &sum, inj));
        projections.push(ModuleMap::trusted(&sum, m, proj));
    }
    Ok(DirectSum { module: sum, injections, projections })
}

/// Map into a direct sum given by its components `[f_1; ...; f_k]`.
pub fn map_into_sum(sum: &DirectSum, parts: &[ModuleMap]) -> ModuleMap {
    let src = parts[0].source();
    let mut acc = ModuleMap::zero(src, &sum.module);
    for (inj, f) in sum.injections.iter().zip(parts) {
        acc = acc.add(&inj.after(f));
    }
    acc
}

/// Map out of a direct sum given by its components `[f_1, ..., f_k]`.
pub fn map_from_sum(sum: &DirectSum, parts: &[ModuleMap]) -> ModuleMap {
    let dst = parts[0].target();
    let mut acc = ModuleMap::zero(&sum.module, dst);
    for (proj, f) in sum.projections.iter().zip(parts) {
        acc = acc.add(&f.after(proj));
    }
    acc
}

/// `rad M`, the sum of the images of all arrows, with its inclusion.
pub fn radical(m: &Module) -> (Module, ModuleMap) {
    let alg = m.algebra();
    let fld = alg.field();
    let basis = (0..alg.num_vertices())
        .map(|v| {
            let mut cols = Vec::new();
            for (ai, a) in alg.arrows().iter().enumerate() {
                if a.to == v {
                    cols.extend(m.arrow(ai).columns());
                }
            }
            let b = span_basis(fld, m.dims()[v], &cols);
            Matrix::from_columns(fld, m.dims()[v], &b)
        })
        .collect();
    submodule_from_basis(m, basis).expect("radical is a submodule")
}

/// `soc M`, the joint kernel of the arrows leaving each vertex.
pub fn socle(m: &Module) -> (Module, ModuleMap) {
    let alg = m.algebra();
    let fld = alg.field();
    let basis = (0..alg.num_vertices())
        .map(|v| {
            let d = m.dims()[v];
            let mut stacked = Matrix::zeros(fld, 0, d);
            for (ai, a) in alg.arrows().iter().enumerate() {
                if a.from == v {
                    stacked = stacked.vstack(m.arrow(ai));
                }
            }
            stacked.kernel_matrix()
        })
        .collect();
    submodule_from_basis(m, basis).expect("socle is a submodule")
}

/// `top M = M / rad M` with the projection.
pub fn top(m: &Module) -> (Module, ModuleMap) {
    let (_, incl) = radical(m);
    cokernel(&incl)
}

/// A direct sum of indecomposable projectives `P(w_1) ⊕ ... ⊕ P(w_k)`, with
/// coordinates at vertex `u` given by the basis paths from `w_j` to `u`,
/// summand by summand.
#[derive(Clone)]
pub struct ProjModule {
    module: Module,
    summands: Vec<usize>,
    coords: Vec<Vec<(usize, usize)>>,
}

impl fmt::Debug for ProjModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjModule{:?}", self.summands)
    }
}

impl ProjModule {
    pub fn new(alg: &Algebra, summands: Vec<usize>) -> ProjModule {
        let fld = alg.field();
        let nv = alg.num_vertices();
        let mut coords: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
        for (u, c) in coords.iter_mut().enumerate() {
            for (j, &w) in summands.iter().enumerate() {
                for b in alg.paths_between(w, u) {
                    c.push((j, b));
                }
            }
        }
        let index = |u: usize, j: usize, b: usize| coords[u].iter().position(|&x| x == (j, b));
        let dims: Vec<usize> = coords.iter().map(Vec::len).collect();
        let mut arrows = Vec::new();
        for (ai, a) in alg.arrows().iter().enumerate() {
            let mut m = Matrix::zeros(fld, dims[a.to], dims[a.from]);
            let ab = alg.arrow_basis(ai);
            for (col, &(j, b)) in coords[a.from].iter().enumerate() {
                for &(k, c) in alg.mult(ab, b) {
                    let row = index(a.to, j, k).expect("product stays in the summand");
                    m.set(row, col, fld.add(m.get(row, col), c));
                }
            }
            arrows.push(m);
        }
        let module = Module::trusted(alg, dims, arrows);
        ProjModule { module, summands, coords }
    }

    pub fn module(&self) -> &Module {
        &self.module
    }
    pub fn algebra(&self) -> &Algebra {
        self.module.algebra()
    }
    pub fn summands(&self) -> &[usize] {
        &self.summands
    }

    fn index(&self, u: usize, j: usize, b: usize) -> Option<usize> {
        self.coords[u].iter().position(|&x| x == (j, b))
    }

    /// Position of the generator `e_{w_j}` of summand `j` within vertex `w_j`.
    pub fn generator(&self, j: usize) -> (usize, usize) {
        let w = self.summands[j];
        let e = self.algebra().idempotent(w);
        (w, self.index(w, j, e).expect("generator present"))
    }

    /// Direct sum of projective modules; coordinates agree with `direct_sum`.
    pub fn concat(&self, other: &ProjModule) -> ProjModule {
        let mut s = self.summands.clone();
        s.extend_from_slice(&other.summands);
        ProjModule::new(self.algebra(), s)
    }

    /// The homomorphism to `target` sending generator `j` to `images[j]`
    /// (a vector in `target` at vertex `w_j`).
    pub fn map_from_generators(&self, target: &Module, images: &[Vector]) -> ModuleMap {
        let alg = self.algebra();
        let fld = alg.field();
        let nv = alg.num_vertices();
        let mut comps = Vec::new();
        for u in 0..nv {
            let mut c = Matrix::zeros(fld, target.dims()[u], self.module.dims()[u]);
            for (col, &(j, b)) in self.coords[u].iter().enumerate() {
                let v = target.basis_action(b).mul_vec(&images[j]);
                for (row, x) in v.into_iter().enumerate() {
                    c.set(row, col, x);
                }
            }
            comps.push(c);
        }
        ModuleMap::trusted(&self.module, target, comps)
    }

    /// Images of the generators under `f`.
    pub fn generator_images(&self, f: &ModuleMap) -> Vec<Vector> {
        (0..self.summands.len())
            .map(|j| {
                let (w, pos) = self.generator(j);
                f.comp(w).column(pos)
            })
            .collect()
    }

    /// The dual over the opposite algebra: `P(w)* = P^op(w)`.
    pub fn star(&self) -> ProjModule {
        ProjModule::new(&self.algebra().opposite(), self.summands.clone())
    }

    /// `ν P = D(P*)`, an injective module.
    pub fn nakayama(&self) -> Module {
        self.star().module().dual()
    }
}

/// A homomorphism between direct sums of indecomposable projectives, recorded
/// by the algebra elements `coef[i][j] ∈ e_{v_i} Λ e_{w_j}`: generator `i` of
/// the source maps to `Σ_j coef[i][j]` placed in summand `j` of the target.
#[derive(Clone, Debug)]
pub struct ProjMap {
    pub src: ProjModule,
    pub dst: ProjModule,
    pub coef: Vec<Vec<Vector>>,
}

impl ProjMap {
    pub fn from_module_map(src: &ProjModule, dst: &ProjModule, f: &ModuleMap) -> ProjMap {
        let alg = src.algebra();
        let images = src.generator_images(f);
        let coef = images
            .iter()
            .enumerate()
            .map(|(i, img)| {
                let vi = src.summands[i];
                (0..dst.summands.len())
                    .map(|j| {
                        let mut lam = vec![0u32; alg.dim()];
                        for (pos, &(jj, b)) in dst.coords[vi].iter().enumerate() {
                            if jj == j {
                                lam[b] = img[pos];
                            }
                        }
                        lam
                    })
                    .collect()
            })
            .collect();
        ProjMap { src: src.clone(), dst: dst.clone(), coef }
    }

    pub fn to_module_map(&self) -> ModuleMap {
        let alg = self.src.algebra();
        let images: Vec<Vector> = (0..self.src.summands.len())
            .map(|i| {
                let vi = self.src.summands[i];
                let mut v = vec![0u32; self.dst.module.dims()[vi]];
                for (j, lam) in self.coef[i].iter().enumerate() {
                    for (b, &c) in lam.iter().enumerate() {
                        if c != 0 {
                            let pos = self.dst.index(vi, j, b).expect("coefficient supported on the right paths");
                            v[pos] = alg.field().add(v[pos], c);
                        }
                    }
                }
                v
            })
            .collect();
        self.src.map_from_generators(&self.dst.module, &images)
    }

    /// `f*: dst* -> src*` over the opposite algebra.
    pub fn star(&self) -> ProjMap {
        let src = self.dst.star();
        let dst = self.src.star();
        let coef = (0..self.dst.summands.len())
            .map(|j| (0..self.src.summands.len()).map(|i| self.coef[i][j].clone()).collect())
            .collect();
        ProjMap { src, dst, coef }
    }

    /// `ν f = D(f*): ν(src) -> ν(dst)`.
    pub fn nakayama(&self) -> ModuleMap {
        self.star().to_module_map().dual()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::{AlgebraSpec, ArrowSpec};

    pub(crate) fn poly(n: usize) -> Algebra {
        AlgebraSpec {
            name: format!("k[x]/(x^{n})"),
            p: 2,
            vertices: vec!["1".into()],
            arrows: vec![ArrowSpec { name: "x".into(), from: "1".into(), to: "1".into() }],
            relations: vec![vec!["x"; n].join("*")],
            bound: n,
        }
        .build()
        .unwrap()
    }

    pub(crate) fn a2() -> Algebra {
        AlgebraSpec {
            name: "kA2".into(),
            p: 2,
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![ArrowSpec { name: "a".into(), from: "1".into(), to: "2".into() }],
            relations: vec![],
            bound: 2,
        }
        .build()
        .unwrap()
    }

    #[test]
    fn standard_modules_of_dual_numbers() {
        let l = poly(2);
        let s = Module::simple(&l, 0);
        let p = Module::projective(&l, 0);
        let i = Module::injective(&l, 0);
        assert_eq!(p.dim(), 2);
        assert_eq!(s.dim(), 1);
        assert_eq!(i.dim(), 2);
        assert_eq!(hom_dim(&s, &s).unwrap(), 1);
        assert_eq!(hom_dim(&p, &p).unwrap(), 2);
        assert_eq!(hom_dim(&s, &p).unwrap(), 1);
        assert_eq!(hom_dim(&p, &s).unwrap(), 1);
    }

    #[test]
    fn a2_projectives() {
        let a = a2();
        assert_eq!(Module::projective(&a, 0).dims(), &[1, 1]);
        assert_eq!(Module::projective(&a, 1).dims(), &[0, 1]);
        assert_eq!(Module::injective(&a, 1).dims(), &[1, 1]);
        assert_eq!(Module::injective(&a, 0).dims(), &[1, 0]);
    }

    #[test]
    fn yoneda_counts() {
        for alg in [poly(3), a2()] {
            let ms: Vec<Module> = (0..alg.num_vertices())
                .flat_map(|v| [Module::simple(&alg, v), Module::projective(&alg, v), Module::injective(&alg, v)])
                .collect();
            for v in 0..alg.num_vertices() {
                let p = Module::projective(&alg, v);
                for m in &ms {
                    assert_eq!(hom_dim(&p, m).unwrap(), m.dims()[v]);
                }
            }
        }
    }

    #[test]
    fn radical_socle_top() {
        let l = poly(2);
        let p = Module::projective(&l, 0);
        assert_eq!(radical(&p).0.dim(), 1);
        assert_eq!(socle(&p).0.dim(), 1);
        assert_eq!(top(&p).0.dim(), 1);
        assert_eq!(radical(&Module::simple(&l, 0)).0.dim(), 0);
        let l3 = poly(3);
        let r = radical(&Module::projective(&l3, 0)).0;
        assert_eq!(r.dim(), 2);
        assert!(!r.arrow(0).is_zero());
    }

    #[test]
    fn cokernel_of_x_is_simple() {
        let l = poly(2);
        let p = Module::projective(&l, 0);
        let x = ModuleMap::new(&p, &p, vec![p.arrow(0).clone()]).unwrap();
        let (c, _) = cokernel(&x);
        assert_eq!(c.dim(), 1);
        let (k, _) = kernel(&ModuleMap::zero(&p, &p));
        assert_eq!(k.dim(), 2);
        assert_eq!(cokernel(&ModuleMap::identity(&p)).0.dim(), 0);
    }

    #[test]
    fn biproduct_identities() {
        let l = poly(2);
        let ms = [Module::projective(&l, 0), Module::simple(&l, 0)];
        let s = direct_sum(&l, &ms).unwrap();
        assert_eq!(s.module.dim(), 3);
        for (i, pi) in s.projections.iter().enumerate() {
            for (j, ij) in s.injections.iter().enumerate() {
                let c = pi.after(ij);
                if i == j {
                    assert!(c.sub(&ModuleMap::identity(&ms[i])).is_zero());
                } else {
                    assert!(c.is_zero());
                }
            }
        }
        assert_eq!(direct_sum(&l, &[]).unwrap().module.dim(), 0);
    }

    #[test]
    fn dual_is_involutive() {
        let a = a2();
        let p = Module::projective(&a, 0);
        let dd = p.dual().dual();
        assert!(dd.same_as(&p));
        assert_eq!(Module::projective(&a, 0).dual().algebra(), &a.opposite());
    }

    #[test]
    fn star_of_x_is_x() {
        let l = poly(2);
        let p = ProjModule::new(&l, vec![0]);
        let x = ModuleMap::new(p.module(), p.module(), vec![p.module().arrow(0).clone()]).unwrap();
        let pm = ProjMap::from_module_map(&p, &p, &x);
        let xs = pm.star().to_module_map();
        assert_eq!(xs.comp(0), p.star().module().arrow(0));
        let id = ProjMap::from_module_map(&p, &p, &ModuleMap::identity(p.module()));
        assert!(id.star().to_module_map().sub(&ModuleMap::identity(p.star().module())).is_zero());
    }

    #[test]
    fn star_is_contravariant() {
        let a = a2();
        let p = ProjModule::new(&a, vec![0, 1]);
        let basis = hom_basis(p.module(), p.module()).unwrap();
        for f in &basis {
            for g in &basis {
                let fg = ProjMap::from_module_map(&p, &p, &g.after(f)).star().to_module_map();
                let fs = ProjMap::from_module_map(&p, &p, f).star().to_module_map();
                let gs = ProjMap::from_module_map(&p, &p, g).star().to_module_map();
                assert!(fg.sub(&fs.after(&gs)).is_zero());
            }
        }
    }

    #[test]
    fn nakayama_sends_projectives_to_injectives() {
        let a = a2();
        for v in 0..2 {
            let nu = ProjModule::new(&a, vec![v]).nakayama();
            assert_eq!(nu.dims(), Module::injective(&a, v).dims());
        }
        let l = poly(2);
        assert_eq!(ProjModule::new(&l, vec![0]).nakayama().dim(), 2);
    }
}
