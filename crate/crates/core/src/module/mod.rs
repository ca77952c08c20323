//! Finite-dimensional right modules over a bound quiver algebra, as representations.

mod decompose;
mod hom;
mod projmap;

pub use decompose::{decompose, is_indecomposable, is_isomorphic, is_isomorphic_indecomposable, is_local_span, split_once};
pub use hom::{
    canonical_sequence, ext1, ext1_dim, ext1_dim_with, from_generators, hom_basis, hom_dim, id, pd, proj_resolution, projective_cover, syzygy, tau,
    tau_inverse, Ext1, HomDim, ProjResolution, ShortExactSequence, Syzygy,
};
pub use projmap::ProjMap;

use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{extend_basis, Fp, Matrix, PrimeField};
use crate::quiver::Path;

#[derive(Clone)]
pub struct Representation {
    alg: Algebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A module homomorphism, given by one matrix per vertex (target dim × source dim).
///
/// Source and target are implicit: every function producing a morphism documents them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    pub maps: Vec<Matrix>,
}

impl ModuleMorphism {
    pub fn zero(f: PrimeField, source: &[usize], target: &[usize]) -> Self {
        ModuleMorphism { maps: source.iter().zip(target).map(|(&s, &t)| Matrix::zeros(f, t, s)).collect() }
    }

    pub fn identity(m: &Representation) -> Self {
        ModuleMorphism { maps: m.dims.iter().map(|&d| Matrix::identity(m.field(), d)).collect() }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &ModuleMorphism) -> ModuleMorphism {
        ModuleMorphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, other: &ModuleMorphism) -> ModuleMorphism {
        ModuleMorphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: Fp) -> ModuleMorphism {
        ModuleMorphism { maps: self.maps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_mono(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    /// All entries, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Fp> {
        self.maps.iter().flat_map(|m| m.data().iter().copied()).collect()
    }

    /// Linear combination `Σ c_i basis_i`.
    pub fn combination(basis: &[ModuleMorphism], coeffs: &[Fp]) -> Option<ModuleMorphism> {
        let mut it = basis.iter().zip(coeffs);
        let (b0, &c0) = it.next()?;
        Some(it.fold(b0.scale(c0), |acc, (b, &c)| acc.add(&b.scale(c))))
    }
}

/// A quotient module with the projection and a linear (not module) section.
pub struct Quotient {
    pub module: Representation,
    pub projection: ModuleMorphism,
    pub section: Vec<Matrix>,
}

impl Representation {
    /// Checks matrix shapes and that every relation acts as zero.
    pub fn new(alg: Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrows().len() {
            return Err(Error::InvalidInput("dimension vector or map count does not match the quiver".into()));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::InvalidInput(format!(
                    "map {} must be {}x{}",
                    a.name, dims[a.target], dims[a.source]
                )));
            }
        }
        let m = Representation { alg, dims, maps };
        for r in m.alg.relations() {
            let (s, t) = r.validate(m.alg.quiver())?;
            let mut acc = Matrix::zeros(m.field(), m.dims[t], m.dims[s]);
            for (c, p) in &r.terms {
                let path = Path { source: s, target: t, arrows: p.clone() };
                acc = acc.add(&m.path_matrix(&path).scale(*c));
            }
            if !acc.is_zero() {
                return Err(Error::InvalidInput("representation does not satisfy the relations".into()));
            }
        }
        Ok(m)
    }

    pub fn zero(alg: &Algebra) -> Self {
        let f = alg.field();
        let maps = alg.quiver().arrows().iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        Representation { alg: alg.clone(), dims: vec![0; alg.vertex_count()], maps }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }
    pub fn field(&self) -> PrimeField {
        self.alg.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }
    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Vertices in the support.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    /// Action of a path (traversal order): `M(a_1 ... a_m) = M(a_m) ⋯ M(a_1)`.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut acc = Matrix::identity(self.field(), self.dims[p.source]);
        for &a in &p.arrows {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    /// `m · p` for a vector `m ∈ M_{source(p)}`.
    pub fn act(&self, p: &Path, m: &[Fp]) -> Vec<Fp> {
        let mut v = m.to_vec();
        for &a in &p.arrows {
            v = self.maps[a].mul_vec(&v);
        }
        v
    }

    /// Per-vertex basis of `rad M = M · rad A`.
    pub fn radical(&self) -> Vec<Matrix> {
        let f = self.field();
        (0..self.dims.len())
            .map(|v| {
                let incoming: Vec<&Matrix> = self
                    .alg
                    .quiver()
                    .arrows()
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.target == v)
                    .map(|(i, _)| &self.maps[i])
                    .collect();
                Matrix::hstack(f, self.dims[v], &incoming).image_basis()
            })
            .collect()
    }

    /// Per-vertex basis of `soc M`: common kernel of all outgoing arrows.
    pub fn socle(&self) -> Vec<Matrix> {
        let f = self.field();
        (0..self.dims.len())
            .map(|v| {
                let outgoing: Vec<&Matrix> = self
                    .alg
                    .quiver()
                    .arrows()
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.source == v)
                    .map(|(i, _)| &self.maps[i])
                    .collect();
                Matrix::vstack(f, self.dims[v], &outgoing).kernel_basis()
            })
            .collect()
    }

    /// Dimension vector of the top `M / rad M`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical().iter().zip(&self.dims).map(|(r, &d)| d - r.cols()).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle().iter().map(Matrix::cols).collect()
    }

    pub fn simple(alg: &Algebra, v: usize) -> Self {
        let f = alg.field();
        let mut dims = vec![0; alg.vertex_count()];
        dims[v] = 1;
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        Representation { alg: alg.clone(), dims, maps }
    }

    /// `⊕_j P(v_j)` with `P(v) = e_v A`; the basis at vertex `w` is the block `e_v A e_w`.
    pub fn projective_sum(alg: &Algebra, vs: &[usize]) -> Self {
        let f = alg.field();
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|w| vs.iter().map(|&v| alg.block(v, w).len()).sum()).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let ab = alg.arrow_basis(ai);
                let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
                let (mut r0, mut c0) = (0, 0);
                for &v in vs {
                    for (c, &b) in alg.block(v, a.source).iter().enumerate() {
                        for &(k, coef) in alg.mul_basis(b, ab) {
                            m.set(r0 + alg.block_pos(k), c0 + c, coef);
                        }
                    }
                    r0 += alg.block(v, a.target).len();
                    c0 += alg.block(v, a.source).len();
                }
                m
            })
            .collect();
        Representation { alg: alg.clone(), dims, maps }
    }

    pub fn projective(alg: &Algebra, v: usize) -> Self {
        Self::projective_sum(alg, &[v])
    }

    /// `⊕_j I(u_j)` with `I(u) = D(A e_u)`; the basis at `w` is dual to the block `e_w A e_u`.
    pub fn injective_sum(alg: &Algebra, us: &[usize]) -> Self {
        let f = alg.field();
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|w| us.iter().map(|&u| alg.block(w, u).len()).sum()).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let ab = alg.arrow_basis(ai);
                let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
                let (mut r0, mut c0) = (0, 0);
                for &u in us {
                    // transpose of q ↦ a·q from e_t A e_u to e_s A e_u
                    for (r, &q) in alg.block(a.target, u).iter().enumerate() {
                        for &(k, coef) in alg.mul_basis(ab, q) {
                            m.set(r0 + r, c0 + alg.block_pos(k), coef);
                        }
                    }
                    r0 += alg.block(a.target, u).len();
                    c0 += alg.block(a.source, u).len();
                }
                m
            })
            .collect();
        Representation { alg: alg.clone(), dims, maps }
    }

    pub fn injective(alg: &Algebra, u: usize) -> Self {
        Self::injective_sum(alg, &[u])
    }

    /// Thin module supported on the vertices `lo..=hi` with identity maps on every arrow
    /// between two of them. Intended for linear quivers.
    pub fn interval(alg: &Algebra, lo: usize, hi: usize) -> Result<Self> {
        let f = alg.field();
        let dims: Vec<usize> = (0..alg.vertex_count()).map(|v| usize::from(lo <= v && v <= hi)).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| {
                let (s, t) = (dims[a.source], dims[a.target]);
                if s == 1 && t == 1 {
                    Matrix::identity(f, 1)
                } else {
                    Matrix::zeros(f, t, s)
                }
            })
            .collect();
        Self::new(alg.clone(), dims, maps)
    }

    pub fn direct_sum(parts: &[&Representation]) -> Representation {
        let alg = parts[0].alg.clone();
        let f = alg.field();
        let n = alg.vertex_count();
        let dims = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..alg.quiver().arrows().len())
            .map(|a| Matrix::block_diag(f, &parts.iter().map(|p| &p.maps[a]).collect::<Vec<_>>()))
            .collect();
        Representation { alg, dims, maps }
    }

    /// Inclusion of the `i`-th summand into `direct_sum(parts)`.
    pub fn sum_injection(parts: &[&Representation], i: usize) -> ModuleMorphism {
        let f = parts[0].field();
        let n = parts[0].dims.len();
        ModuleMorphism {
            maps: (0..n)
                .map(|v| {
                    let total: usize = parts.iter().map(|p| p.dims[v]).sum();
                    let off: usize = parts[..i].iter().map(|p| p.dims[v]).sum();
                    let mut m = Matrix::zeros(f, total, parts[i].dims[v]);
                    for k in 0..parts[i].dims[v] {
                        m.set(off + k, k, 1);
                    }
                    m
                })
                .collect(),
        }
    }

    /// Projection of `direct_sum(parts)` onto the `i`-th summand.
    pub fn sum_projection(parts: &[&Representation], i: usize) -> ModuleMorphism {
        let inj = Self::sum_injection(parts, i);
        ModuleMorphism { maps: inj.maps.iter().map(Matrix::transpose).collect() }
    }

    /// Submodule spanned by the given per-vertex column bases (which must be stable under
    /// the arrows), with its inclusion.
    pub fn submodule(&self, basis: &[Matrix]) -> (Representation, ModuleMorphism) {
        let dims: Vec<usize> = basis.iter().map(Matrix::cols).collect();
        let maps = self
            .alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let img = self.maps[ai].mul(&basis[a.source]);
                basis[a.target].solve(&img).expect("subspaces are not stable under the arrows")
            })
            .collect();
        let sub = Representation { alg: self.alg.clone(), dims, maps };
        (sub, ModuleMorphism { maps: basis.to_vec() })
    }

    /// Quotient by the submodule spanned by the per-vertex column bases.
    pub fn quotient(&self, basis: &[Matrix]) -> Quotient {
        let f = self.field();
        let mut section = Vec::new();
        let mut proj = Vec::new();
        for (v, u) in basis.iter().enumerate() {
            let d = self.dims[v];
            let sub_cols = u.columns();
            let units: Vec<Vec<Fp>> = (0..d)
                .map(|i| {
                    let mut e = vec![0; d];
                    e[i] = 1;
                    e
                })
                .collect();
            let chosen = extend_basis(f, d, &sub_cols, &units);
            let c = Matrix::from_columns(f, d, &chosen.iter().map(|&i| units[i].clone()).collect::<Vec<_>>());
            let full = Matrix::hstack(f, d, &[u, &c]);
            let inv = full.inverse().expect("submodule basis plus complement spans");
            proj.push(inv.block(u.cols(), 0, c.cols(), d));
            section.push(c);
        }
        let maps = self
            .alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| proj[a.target].mul(&self.maps[ai]).mul(&section[a.source]))
            .collect();
        let dims = section.iter().map(Matrix::cols).collect();
        Quotient {
            module: Representation { alg: self.alg.clone(), dims, maps },
            projection: ModuleMorphism { maps: proj },
            section,
        }
    }

    /// Kernel of `phi: self -> N` as a submodule of `self`.
    pub fn kernel(&self, phi: &ModuleMorphism) -> (Representation, ModuleMorphism) {
        let basis: Vec<Matrix> = phi.maps.iter().map(Matrix::kernel_basis).collect();
        self.submodule(&basis)
    }

    /// Image of `phi: M -> self` as a submodule of `self`.
    pub fn image_of(&self, phi: &ModuleMorphism) -> (Representation, ModuleMorphism) {
        let basis: Vec<Matrix> = phi.maps.iter().map(Matrix::image_basis).collect();
        self.submodule(&basis)
    }

    /// Smallest submodule containing the given per-vertex vectors.
    pub fn generated_submodule(&self, gens: &[Vec<Vec<Fp>>]) -> Vec<Matrix> {
        let f = self.field();
        let n = self.dims.len();
        let mut ech: Vec<crate::exactla::Echelon> =
            (0..n).map(|v| crate::exactla::Echelon::new(f, self.dims[v])).collect();
        let mut queue: Vec<(usize, Vec<Fp>)> = Vec::new();
        for (v, vs) in gens.iter().enumerate() {
            for x in vs {
                if ech[v].insert(x.clone()) {
                    queue.push((v, x.clone()));
                }
            }
        }
        while let Some((v, x)) = queue.pop() {
            for (ai, a) in self.alg.quiver().arrows().iter().enumerate() {
                if a.source == v {
                    let y = self.maps[ai].mul_vec(&x);
                    if ech[a.target].insert(y.clone()) {
                        queue.push((a.target, y));
                    }
                }
            }
        }
        (0..n).map(|v| Matrix::from_columns(f, self.dims[v], &ech[v].basis())).collect()
    }

    /// `D M = Hom_k(M, k)` as a module over the opposite algebra.
    pub fn dual(&self) -> Representation {
        let op = self.alg.opposite();
        Representation { alg: op, dims: self.dims.clone(), maps: self.maps.iter().map(Matrix::transpose).collect() }
    }

    /// Restriction along `A -> A/⟨e⟩` for a module with `M e = 0`; `quotient` must be the
    /// algebra returned by `idempotent_quotient(cut)`.
    pub fn to_quotient(&self, quotient: &Algebra, cut: &[usize]) -> Result<Representation> {
        if cut.iter().any(|&v| self.dims[v] != 0) {
            return Err(Error::InvalidInput("module is not annihilated by the cut idempotent".into()));
        }
        let keep: Vec<usize> = (0..self.dims.len()).filter(|v| !cut.contains(v)).collect();
        let dims = keep.iter().map(|&v| self.dims[v]).collect();
        let maps = quotient
            .quiver()
            .arrows()
            .iter()
            .map(|a| {
                let ai = self.alg.quiver().arrow_index(&a.name).expect("quotient keeps arrow names");
                self.maps[ai].clone()
            })
            .collect();
        Representation::new(quotient.clone(), dims, maps)
    }

    /// Inverse of [`Representation::to_quotient`]: extend by zero along the cut.
    pub fn from_quotient(alg: &Algebra, m: &Representation, cut: &[usize]) -> Representation {
        let f = alg.field();
        let keep: Vec<usize> = (0..alg.vertex_count()).filter(|v| !cut.contains(v)).collect();
        let mut dims = vec![0; alg.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            dims[v] = m.dims[i];
        }
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| match m.alg.quiver().arrow_index(&a.name) {
                Some(qi) if !cut.contains(&a.source) && !cut.contains(&a.target) => m.maps[qi].clone(),
                _ => Matrix::zeros(f, dims[a.target], dims[a.source]),
            })
            .collect();
        Representation { alg: alg.clone(), dims, maps }
    }

    /// Whole-space matrix of an endomorphism given per vertex.
    pub fn total_matrix(&self, phi: &ModuleMorphism) -> Matrix {
        Matrix::block_diag(self.field(), &phi.maps.iter().collect::<Vec<_>>())
    }

    /// Dimension vector written as in the figures, e.g. `[0,1,1]` for the interval on 2..3.
    pub fn dim_label(&self) -> String {
        let parts: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        format!("[{}]", parts.join(","))
    }

    /// Composition-factor label listing the top-to-bottom vertices of a thin module, e.g. `432`.
    pub fn thin_label(&self) -> Option<String> {
        if self.dims.iter().any(|&d| d > 1) {
            return None;
        }
        Some(self.support().iter().rev().map(|v| (v + 1).to_string()).collect())
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation {} {:?}", self.dim_label(), self.maps)
    }
}

impl PartialEq for Representation {
    /// Equality of matrices, not isomorphism.
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_presentation(&other.alg) && self.dims == other.dims && self.maps == other.maps
    }
}

#[cfg(test)]
mod tests;
