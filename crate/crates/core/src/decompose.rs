//! Krull–Schmidt decomposition by Fitting splitting, with a certificate that
//! each summand has a local endomorphism ring.

use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{span_basis, Matrix, Vector};
use crate::module::{hom_basis, submodule_from_basis, Module, ModuleMap};

static SEED: AtomicU64 = AtomicU64::new(0);

/// Seed for the randomized fallback of the splitting search. Results never
/// depend on it except through which splitting is found first.
pub fn set_seed(seed: u64) {
    SEED.store(seed, Ordering::Relaxed);
}

pub fn seed() -> u64 {
    SEED.load(Ordering::Relaxed)
}

/// How the endomorphism ring of a module looks.
#[derive(Clone, Debug)]
pub enum EndStructure {
    Zero,
    /// Local ring; the basis spans its radical.
    Local(Vec<ModuleMap>),
    /// An endomorphism that is neither nilpotent nor invertible.
    Splits(ModuleMap),
}

fn power(f: &ModuleMap, e: u64) -> ModuleMap {
    let comps = f.comps().iter().map(|c| c.pow(e)).collect();
    ModuleMap::from_parts_unchecked(f.source(), f.target(), comps)
}

fn is_nilpotent(f: &ModuleMap) -> bool {
    f.comps().iter().all(Matrix::is_nilpotent)
}

fn is_invertible(f: &ModuleMap) -> bool {
    f.comps().iter().all(Matrix::is_invertible)
}

/// Semisimple part of the Jordan–Chevalley decomposition: for `p^k >= dim`
/// the iterated Frobenius powers of `f` cycle through conjugates of it.
pub fn semisimple_part(f: &ModuleMap) -> Result<ModuleMap> {
    let p = f.source().algebra().field().p() as u64;
    let d = f.source().dim() as u64;
    let mut k0 = 0u64;
    let mut pk = 1u64;
    while pk < d {
        pk = pk.saturating_mul(p);
        k0 += 1;
    }
    let mut y = f.clone();
    for _ in 0..k0 {
        y = power(&y, p);
    }
    let mut z = power(&y, p);
    let mut r = 1u64;
    while z.to_vector() != y.to_vector() {
        z = power(&z, p);
        r += 1;
        if r > 100_000 {
            return Err(Error::Verification("Frobenius orbit too long in semisimple part".into()));
        }
    }
    let target = r * k0.div_ceil(r);
    for _ in k0..target {
        y = power(&y, p);
    }
    Ok(y)
}

/// Classify `End(m)`.
pub fn end_structure(m: &Module) -> Result<EndStructure> {
    if m.is_zero() {
        return Ok(EndStructure::Zero);
    }
    let basis = hom_basis(m, m)?;
    analyze_end(m, &basis)
}

fn analyze_end(m: &Module, basis: &[ModuleMap]) -> Result<EndStructure> {
    let field = m.algebra().field();
    let n = basis[0].to_vector().len();
    for b in basis {
        if !is_nilpotent(b) && !is_invertible(b) {
            return Ok(EndStructure::Splits(b.clone()));
        }
    }
    let mut gens: Vec<Vector> = Vec::new();
    for b in basis {
        if is_nilpotent(b) {
            gens.push(b.to_vector());
        } else {
            gens.push(b.sub(&semisimple_part(b)?).to_vector());
        }
    }
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            gens.push(a.after(b).sub(&b.after(a)).to_vector());
        }
    }
    // Two-sided ideal generated by the nilpotent parts and the commutators.
    let mut ideal = span_basis(field, n, &gens);
    loop {
        let mut more = ideal.clone();
        for x in &ideal {
            let xm = ModuleMap::from_vector(m, m, x);
            for b in basis {
                more.push(b.after(&xm).to_vector());
                more.push(xm.after(b).to_vector());
            }
        }
        let next = span_basis(field, n, &more);
        if next.len() == ideal.len() {
            break;
        }
        ideal = next;
    }
    let proper = ideal.len() < basis.len();
    let nilpotent = proper && {
        let mut pw = ideal.clone();
        loop {
            if pw.is_empty() {
                break true;
            }
            let mut prods = Vec::new();
            for x in &pw {
                let xm = ModuleMap::from_vector(m, m, x);
                for y in &ideal {
                    prods.push(xm.after(&ModuleMap::from_vector(m, m, y)).to_vector());
                }
            }
            let next = span_basis(field, n, &prods);
            if next.len() == pw.len() {
                break false;
            }
            pw = next;
        }
    };
    if nilpotent {
        // Representatives of E / J: basis elements extending the ideal.
        let mut reps: Vec<&ModuleMap> = Vec::new();
        let mut acc = ideal.clone();
        for b in basis {
            let v = b.to_vector();
            let mut t = acc.clone();
            t.push(v);
            let nb = span_basis(field, n, &t);
            if nb.len() > acc.len() {
                acc = nb;
                reps.push(b);
            }
        }
        // Coordinates modulo the ideal: solve against [reps | ideal].
        let mut cols: Vec<Vector> = reps.iter().map(|r| r.to_vector()).collect();
        cols.extend(ideal.iter().cloned());
        let frame = Matrix::from_columns(field, n, &cols);
        let q = reps.len();
        let coords = |v: &Vector| -> Vector {
            let x = frame.solve(v).expect("frame has full rank").expect("element lies in the algebra");
            x[..q].to_vec()
        };
        let p = field.p() as u64;
        let mut frob = Matrix::zeros(field, q, q);
        for (j, r) in reps.iter().enumerate() {
            let c = coords(&power(r, p).to_vector());
            for (i, x) in c.into_iter().enumerate() {
                frob.set(i, j, x);
            }
        }
        let fixed = frob.sub(&Matrix::identity(field, q)).kernel_basis();
        if fixed.len() == 1 {
            let radical = ideal.iter().map(|v| ModuleMap::from_vector(m, m, v)).collect();
            return Ok(EndStructure::Local(radical));
        }
        let ident = coords(&ModuleMap::identity(m).to_vector());
        for a in &fixed {
            if span_basis(field, q, &[ident.clone(), a.clone()]).len() < 2 {
                continue;
            }
            let mut lift = ModuleMap::zero(m, m);
            for (c, r) in a.iter().zip(&reps) {
                lift = lift.add(&r.scale(*c));
            }
            for lam in 0..field.p() {
                let phi = lift.sub(&ModuleMap::identity(m).scale(lam));
                if !is_invertible(&phi) && !is_nilpotent(&phi) {
                    return Ok(EndStructure::Splits(phi));
                }
            }
        }
        return Err(Error::Verification("Frobenius-fixed element did not yield a splitting".into()));
    }
    random_split(m, basis)
}

fn random_split(m: &Module, basis: &[ModuleMap]) -> Result<EndStructure> {
    let field = m.algebra().field();
    let p = field.p();
    let mut rng = ChaCha8Rng::seed_from_u64(seed());
    let combo = |coefs: &[u32]| {
        let mut acc = ModuleMap::zero(m, m);
        for (c, b) in coefs.iter().zip(basis) {
            if *c != 0 {
                acc = acc.add(&b.scale(*c));
            }
        }
        acc
    };
    for _ in 0..256 {
        let coefs: Vec<u32> = (0..basis.len()).map(|_| rng.gen_range(0..p)).collect();
        let x = combo(&coefs);
        if !is_nilpotent(&x) && !is_invertible(&x) {
            return Ok(EndStructure::Splits(x));
        }
    }
    let total = (p as f64).powi(basis.len() as i32);
    if total <= 65_536.0 {
        let mut coefs = vec![0u32; basis.len()];
        let mut nil = Vec::new();
        loop {
            let x = combo(&coefs);
            if is_nilpotent(&x) {
                nil.push(x.to_vector());
            } else if !is_invertible(&x) {
                return Ok(EndStructure::Splits(x));
            }
            let mut i = 0;
            loop {
                if i == coefs.len() {
                    let n = basis[0].to_vector().len();
                    let rad = span_basis(field, n, &nil);
                    return Ok(EndStructure::Local(rad.iter().map(|v| ModuleMap::from_vector(m, m, v)).collect()));
                }
                coefs[i] += 1;
                if coefs[i] < p {
                    break;
                }
                coefs[i] = 0;
                i += 1;
            }
        }
    }
    Err(Error::Verification("could not certify locality or find a splitting endomorphism".into()))
}

/// Fitting decomposition `M = ker φ^d ⊕ im φ^d` for an endomorphism.
pub fn fitting_split(phi: &ModuleMap) -> ((Module, ModuleMap), (Module, ModuleMap)) {
    let m = phi.source();
    let psi = power(phi, m.dim() as u64);
    let ker: Vec<Matrix> = psi.comps().iter().map(Matrix::kernel_matrix).collect();
    let im: Vec<Matrix> = psi.comps().iter().map(Matrix::image_matrix).collect();
    (
        submodule_from_basis(m, ker).expect("Fitting kernel is a submodule"),
        submodule_from_basis(m, im).expect("Fitting image is a submodule"),
    )
}

/// One indecomposable summand of a module with its split inclusion and
/// projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub incl: ModuleMap,
    pub proj: ModuleMap,
    /// Basis of the radical of `End(module)`.
    pub radical: Vec<ModuleMap>,
}

/// Split `m` into indecomposable summands (in a deterministic order).
pub fn summands(m: &Module) -> Result<Vec<Summand>> {
    let mut parts: Vec<(Module, ModuleMap, Vec<ModuleMap>)> = Vec::new();
    let mut stack = vec![(m.clone(), ModuleMap::identity(m))];
    while let Some((x, incl)) = stack.pop() {
        match end_structure(&x)? {
            EndStructure::Zero => {}
            EndStructure::Local(rad) => parts.push((x, incl, rad)),
            EndStructure::Splits(phi) => {
                let ((k, ik), (i, ii)) = fitting_split(&phi);
                if k.is_zero() || i.is_zero() {
                    return Err(Error::Verification("Fitting split was trivial".into()));
                }
                // Push the image first so the kernel part is processed first.
                stack.push((i, incl.after(&ii)));
                stack.push((k, incl.after(&ik)));
            }
        }
    }
    let field = m.algebra().field();
    let nv = m.algebra().num_vertices();
    let mut frames = Vec::new();
    for v in 0..nv {
        let mut f = Matrix::zeros(field, m.dims()[v], 0);
        for (_, incl, _) in &parts {
            f = f.hstack(incl.comp(v));
        }
        let inv = f.inverse().ok_or_else(|| Error::Verification("summands do not span the module".into()))?;
        frames.push(inv);
    }
    let mut offs = vec![0usize; nv];
    let mut out = Vec::new();
    for (x, incl, rad) in parts {
        let comps = (0..nv)
            .map(|v| {
                let d = x.dims()[v];
                let r = frames[v].submatrix(offs[v]..offs[v] + d, 0..m.dims()[v]);
                offs[v] += d;
                r
            })
            .collect();
        let proj = ModuleMap::new(m, &x, comps).map_err(|e| Error::Verification(format!("summand projection: {e}")))?;
        out.push(Summand { module: x, incl, proj, radical: rad });
    }
    Ok(out)
}

/// Indecomposable summands grouped into isomorphism classes with multiplicities.
pub fn decompose(m: &Module) -> Result<Vec<(Module, usize)>> {
    let mut classes: Vec<(Module, usize)> = Vec::new();
    for s in summands(m)? {
        let mut found = false;
        for (rep, mult) in classes.iter_mut() {
            if iso_indecomposable(rep, &s.module)? {
                *mult += 1;
                found = true;
                break;
            }
        }
        if !found {
            classes.push((s.module, 1));
        }
    }
    Ok(classes)
}

pub fn is_indecomposable(m: &Module) -> Result<bool> {
    Ok(matches!(end_structure(m)?, EndStructure::Local(_)))
}

/// Radical of `End(m)` when `m` is indecomposable.
pub fn local_radical(m: &Module) -> Result<Option<Vec<ModuleMap>>> {
    Ok(match end_structure(m)? {
        EndStructure::Local(r) => Some(r),
        _ => None,
    })
}

/// Isomorphism test for indecomposable modules: `Hom(m, n)` contains an
/// isomorphism iff some basis element is one, since the non-isomorphisms form
/// a proper subspace.
pub fn iso_indecomposable(m: &Module, n: &Module) -> Result<bool> {
    if m.algebra() != n.algebra() || m.dims() != n.dims() {
        return Ok(false);
    }
    Ok(hom_basis(m, n)?.iter().any(ModuleMap::is_iso))
}

/// An isomorphism between indecomposable modules, if one exists.
pub fn find_iso_indecomposable(m: &Module, n: &Module) -> Result<Option<ModuleMap>> {
    if m.algebra() != n.algebra() || m.dims() != n.dims() {
        return Ok(None);
    }
    Ok(hom_basis(m, n)?.into_iter().find(ModuleMap::is_iso))
}

/// General isomorphism test via decompositions.
pub fn isomorphic(m: &Module, n: &Module) -> Result<bool> {
    if m.algebra() != n.algebra() || m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let a = decompose(m)?;
    let b = decompose(n)?;
    same_multiset(&a, &b)
}

/// Compare two decompositions as multisets of isomorphism classes.
pub fn same_multiset(a: &[(Module, usize)], b: &[(Module, usize)]) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut used = vec![false; b.len()];
    for (x, mx) in a {
        let mut hit = false;
        for (j, (y, my)) in b.iter().enumerate() {
            if !used[j] && mx == my && iso_indecomposable(x, y)? {
                used[j] = true;
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cheap isomorphism invariant: dimension vector, `dim End`, `dim rad`, `dim soc`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoKey {
    pub dims: Vec<usize>,
    pub end: usize,
    pub rad: usize,
    pub soc: usize,
}

pub fn iso_key(m: &Module) -> Result<IsoKey> {
    Ok(IsoKey {
        dims: m.dims().to_vec(),
        end: crate::module::hom_dim(m, m)?,
        rad: crate::module::radical(m).0.dim(),
        soc: crate::module::socle(m).0.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::tests::{a2, poly};
    use crate::module::{direct_sum, Module};

    #[test]
    fn regular_module_of_local_algebra_is_indecomposable() {
        let l = poly(2);
        let p = Module::projective(&l, 0);
        let d = decompose(&p).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 1);
        assert!(is_indecomposable(&p).unwrap());
    }

    #[test]
    fn repeated_simple() {
        let l = poly(2);
        let s = Module::simple(&l, 0);
        let ss = direct_sum(&l, &[s.clone(), s.clone()]).unwrap().module;
        let d = decompose(&ss).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
        assert!(decompose(&Module::zero(&l)).unwrap().is_empty());
    }

    #[test]
    fn mixed_sum_over_a2() {
        let a = a2();
        let parts = [Module::projective(&a, 0), Module::simple(&a, 0), Module::simple(&a, 1), Module::simple(&a, 1)];
        let sum = direct_sum(&a, &parts).unwrap().module;
        let d = decompose(&sum).unwrap();
        let mut mults: Vec<usize> = d.iter().map(|x| x.1).collect();
        mults.sort();
        assert_eq!(mults, vec![1, 1, 2]);
        let s = summands(&sum).unwrap();
        // projections and inclusions are a biproduct
        for (i, x) in s.iter().enumerate() {
            for (j, y) in s.iter().enumerate() {
                let c = x.proj.after(&y.incl);
                if i == j {
                    assert!(c.sub(&ModuleMap::identity(&x.module)).is_zero());
                } else {
                    assert!(c.is_zero());
                }
            }
        }
    }

    #[test]
    fn semisimple_part_of_unipotent_is_identity() {
        let l = poly(3);
        let p = Module::projective(&l, 0);
        let x = ModuleMap::new(&p, &p, vec![p.arrow(0).clone()]).unwrap();
        let u = ModuleMap::identity(&p).add(&x);
        let s = semisimple_part(&u).unwrap();
        assert!(s.sub(&ModuleMap::identity(&p)).is_zero());
    }

    #[test]
    fn iso_tests() {
        let l = poly(2);
        let p = Module::projective(&l, 0);
        let i = Module::injective(&l.opposite(), 0).dual();
        assert!(iso_indecomposable(&Module::injective(&l, 0), &p).unwrap());
        assert!(!iso_indecomposable(&p, &direct_sum(&l, &[Module::simple(&l, 0), Module::simple(&l, 0)]).unwrap().module).unwrap());
        assert_eq!(i.algebra(), &l);
    }
}
