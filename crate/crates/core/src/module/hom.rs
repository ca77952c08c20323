//! Hom and Ext¹ spaces, minimal projective resolutions, homological dimensions and the
//! Auslander–Reiten translate.

use std::fmt;

use crate::exactla::{extend_basis, Fp, Matrix};

use super::{ModuleMorphism, ProjMap, Representation};

/// Resolutions longer than this are reported as infinite.
pub const RESOLUTION_CAP: usize = 64;

/// Projective or injective dimension. `Zero` stands for the zero module (dimension −∞)
/// and sorts below every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HomDim {
    Zero,
    Finite(usize),
    Infinite,
}

impl HomDim {
    pub fn at_most(self, d: usize) -> bool {
        self <= HomDim::Finite(d)
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            HomDim::Finite(d) => Some(d),
            _ => None,
        }
    }
}

impl serde::Serialize for HomDim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            HomDim::Finite(d) => s.serialize_u64(*d as u64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl fmt::Display for HomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDim::Zero => write!(f, "-inf"),
            HomDim::Finite(d) => write!(f, "{d}"),
            HomDim::Infinite => write!(f, "inf"),
        }
    }
}

/// Basis of `Hom_A(M, N)`: the solution space of `N(a) X_s = X_t M(a)` for all arrows.
pub fn hom_basis(m: &Representation, n: &Representation) -> Vec<ModuleMorphism> {
    let f = m.field();
    let nv = m.dims().len();
    let mut offsets = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for v in 0..nv {
        offsets.push(unknowns);
        unknowns += m.dims()[v] * n.dims()[v];
    }
    if unknowns == 0 {
        return Vec::new();
    }
    let arrows = m.algebra().quiver().arrows();
    let rows: usize = arrows.iter().map(|a| n.dims()[a.target] * m.dims()[a.source]).sum();
    let mut sys = Matrix::zeros(f, rows, unknowns);
    let mut r0 = 0;
    for (ai, a) in arrows.iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ms, nt) = (m.dims()[s], n.dims()[t]);
        let (ns, mt) = (n.dims()[s], m.dims()[t]);
        let (na, ma) = (n.map(ai), m.map(ai));
        // entry (i, k) of N(a) X_s - X_t M(a)
        for i in 0..nt {
            for k in 0..ms {
                let row = r0 + i * ms + k;
                for r in 0..ns {
                    let c = na.get(i, r);
                    if c != 0 {
                        let col = offsets[s] + r * ms + k;
                        sys.set(row, col, f.add(sys.get(row, col), c));
                    }
                }
                for c in 0..mt {
                    let x = ma.get(c, k);
                    if x != 0 {
                        let col = offsets[t] + i * mt + c;
                        sys.set(row, col, f.sub(sys.get(row, col), x));
                    }
                }
            }
        }
        r0 += nt * ms;
    }
    let ker = sys.kernel_basis();
    (0..ker.cols())
        .map(|j| {
            let col = ker.column(j);
            ModuleMorphism {
                maps: (0..nv)
                    .map(|v| {
                        let (r, c) = (n.dims()[v], m.dims()[v]);
                        Matrix::from_vec(f, r, c, col[offsets[v]..offsets[v] + r * c].to_vec())
                    })
                    .collect(),
            }
        })
        .collect()
}

pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    hom_basis(m, n).len()
}

/// Minimal projective cover `⊕ P(v_j) -> M`; the `j`-th summand's generator goes to a lift
/// of a top basis vector at `v_j`. Returns `(v_j)`, the projective module and the cover map.
pub fn projective_cover(m: &Representation) -> (Vec<usize>, Representation, ModuleMorphism) {
    let alg = m.algebra();
    let f = m.field();
    let rad = m.radical();
    let mut vertices = Vec::new();
    let mut lifts = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let d = m.dims()[v];
        let units: Vec<Vec<Fp>> = (0..d)
            .map(|i| {
                let mut e = vec![0; d];
                e[i] = 1;
                e
            })
            .collect();
        for i in extend_basis(f, d, &r.columns(), &units) {
            vertices.push(v);
            lifts.push(units[i].clone());
        }
    }
    let cover = Representation::projective_sum(alg, &vertices);
    let pi = from_generators(m, &vertices, &lifts);
    (vertices, cover, pi)
}

/// The morphism `⊕ P(v_j) -> M` sending the `j`-th generator to `images[j] ∈ M_{v_j}`.
pub fn from_generators(m: &Representation, vertices: &[usize], images: &[Vec<Fp>]) -> ModuleMorphism {
    let alg = m.algebra();
    let f = m.field();
    let maps = (0..alg.vertex_count())
        .map(|w| {
            let cols: Vec<Vec<Fp>> = vertices
                .iter()
                .zip(images)
                .flat_map(|(&v, x)| alg.block(v, w).iter().map(move |&b| m.act(&alg.basis()[b], x)))
                .collect();
            Matrix::from_columns(f, m.dims()[w], &cols)
        })
        .collect();
    ModuleMorphism { maps }
}

/// `0 -> ΩM -> P_0 -> M -> 0` with `P_0` the projective cover.
#[derive(Clone, Debug)]
pub struct Syzygy {
    pub cover_vertices: Vec<usize>,
    pub cover: Representation,
    pub pi: ModuleMorphism,
    pub omega: Representation,
    pub iota: ModuleMorphism,
}

pub fn syzygy(m: &Representation) -> Syzygy {
    let (cover_vertices, cover, pi) = projective_cover(m);
    let (omega, iota) = cover.kernel(&pi);
    Syzygy { cover_vertices, cover, pi, omega, iota }
}

/// Minimal projective resolution `⋯ -> P_1 -> P_0 -> M`.
#[derive(Clone, Debug)]
pub struct ProjResolution {
    /// vertices of the indecomposable summands of each `P_i`
    pub terms: Vec<Vec<usize>>,
    /// `differentials[i]: P_{i+1} -> P_i`
    pub differentials: Vec<ProjMap>,
    /// `Ω^i M` for `i = 0..`; the last entry is zero unless the resolution was truncated
    pub syzygies: Vec<Representation>,
    pub truncated: bool,
}

impl ProjResolution {
    pub fn length(&self) -> HomDim {
        if self.truncated {
            HomDim::Infinite
        } else if self.terms.is_empty() {
            HomDim::Zero
        } else {
            HomDim::Finite(self.terms.len() - 1)
        }
    }
}

pub fn proj_resolution(m: &Representation, cap: usize) -> ProjResolution {
    let alg = m.algebra();
    let mut terms = Vec::new();
    let mut differentials = Vec::new();
    let mut syzygies = vec![m.clone()];
    let mut prev_iota: Option<ModuleMorphism> = None;
    let mut current = m.clone();
    while !current.is_zero() {
        if terms.len() > cap {
            return ProjResolution { terms, differentials, syzygies, truncated: true };
        }
        let s = syzygy(&current);
        if let Some(iota) = prev_iota.take() {
            let d = iota.compose(&s.pi);
            let prev_terms: &Vec<usize> = terms.last().unwrap();
            differentials.push(ProjMap::from_morphism(alg, &s.cover_vertices, prev_terms, &d));
        }
        terms.push(s.cover_vertices.clone());
        syzygies.push(s.omega.clone());
        prev_iota = Some(s.iota);
        current = s.omega;
    }
    ProjResolution { terms, differentials, syzygies, truncated: false }
}

pub fn pd(m: &Representation) -> HomDim {
    let mut current = m.clone();
    let mut len = 0;
    while !current.is_zero() {
        if len > RESOLUTION_CAP {
            return HomDim::Infinite;
        }
        current = syzygy(&current).omega;
        len += 1;
    }
    if len == 0 {
        HomDim::Zero
    } else {
        HomDim::Finite(len - 1)
    }
}

/// `id_A M = pd_{A^op} D M`.
pub fn id(m: &Representation) -> HomDim {
    pd(&m.dual())
}

/// Ext¹(M, N) computed from `0 -> ΩM -> P_0 -> M -> 0` as the cokernel of
/// `Hom(P_0, N) -> Hom(ΩM, N)`; classes are represented by maps `ΩM -> N`.
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub syz: Syzygy,
    pub classes: Vec<ModuleMorphism>,
}

impl Ext1 {
    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    /// Pushout of `0 -> ΩM -> P_0 -> M -> 0` along `class: ΩM -> N`, giving `0 -> N -> E -> M -> 0`.
    pub fn middle_term(&self, m: &Representation, n: &Representation, class: &ModuleMorphism) -> ShortExactSequence {
        let f = m.field();
        let parts = [n, &self.syz.cover];
        let sum = Representation::direct_sum(&parts);
        let g = ModuleMorphism {
            maps: class
                .maps
                .iter()
                .zip(&self.syz.iota.maps)
                .map(|(c, i)| Matrix::vstack(f, c.cols(), &[c, &i.scale(f.neg(1))]).image_basis())
                .collect(),
        };
        let q = sum.quotient(&g.maps);
        let incl_n = Representation::sum_injection(&parts, 0);
        let iota = q.projection.compose(&incl_n);
        let to_m = self.syz.pi.compose(&Representation::sum_projection(&parts, 1));
        let pi = ModuleMorphism { maps: to_m.maps.iter().zip(&q.section).map(|(a, s)| a.mul(s)).collect() };
        ShortExactSequence { left: n.clone(), middle: q.module, right: m.clone(), iota, pi }
    }
}

pub fn ext1(m: &Representation, n: &Representation) -> Ext1 {
    let syz = syzygy(m);
    let homs = hom_basis(&syz.omega, n);
    let f = m.field();
    let len: usize = homs.first().map_or(0, |h| h.flatten().len());
    // images of Hom(P_0, N): generator j ↦ basis vector of N_{v_j}, restricted to ΩM
    let mut images = Vec::new();
    for (j, &v) in syz.cover_vertices.iter().enumerate() {
        for x in 0..n.dims()[v] {
            let mut gens = vec![vec![0; 0]; syz.cover_vertices.len()];
            for (k, &w) in syz.cover_vertices.iter().enumerate() {
                gens[k] = vec![0; n.dims()[w]];
            }
            gens[j][x] = 1;
            let phi = from_generators(n, &syz.cover_vertices, &gens);
            images.push(phi.compose(&syz.iota).flatten());
        }
    }
    let flat: Vec<Vec<Fp>> = homs.iter().map(ModuleMorphism::flatten).collect();
    let chosen = if len == 0 { Vec::new() } else { extend_basis(f, len, &images, &flat) };
    let classes = chosen.into_iter().map(|i| homs[i].clone()).collect();
    Ext1 { syz, classes }
}

/// `dim Ext¹(M, N)` from the exact sequence
/// `0 -> Hom(M,N) -> Hom(P_0,N) -> Hom(ΩM,N) -> Ext¹(M,N) -> 0`.
pub fn ext1_dim(m: &Representation, n: &Representation) -> usize {
    let syz = syzygy(m);
    ext1_dim_with(&syz, m, n)
}

pub fn ext1_dim_with(syz: &Syzygy, m: &Representation, n: &Representation) -> usize {
    let hom_p0: usize = syz.cover_vertices.iter().map(|&v| n.dims()[v]).sum();
    hom_dim(&syz.omega, n) + hom_dim(m, n) - hom_p0
}

#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub left: Representation,
    pub middle: Representation,
    pub right: Representation,
    /// `left -> middle`
    pub iota: ModuleMorphism,
    /// `middle -> right`
    pub pi: ModuleMorphism,
}

impl ShortExactSequence {
    /// Mono, epi, composite zero and vertexwise dimension count.
    pub fn is_exact(&self) -> bool {
        let dims_ok = (0..self.middle.dims().len())
            .all(|v| self.middle.dims()[v] == self.left.dims()[v] + self.right.dims()[v]);
        dims_ok && self.iota.is_mono() && self.pi.is_epi() && self.pi.compose(&self.iota).is_zero()
    }

    pub fn splits(&self) -> bool {
        // split iff some M -> middle is a section of pi: Hom(right, middle) -> End(right) hits 1
        let homs = hom_basis(&self.right, &self.middle);
        let f = self.right.field();
        let targets: Vec<Vec<Fp>> = homs.iter().map(|h| self.pi.compose(h).flatten()).collect();
        let id = ModuleMorphism::identity(&self.right).flatten();
        if id.is_empty() {
            return true;
        }
        let m = Matrix::from_columns(f, id.len(), &targets);
        m.solve_vec(&id).is_ok()
    }
}

/// Auslander–Reiten translate `τM = D Tr M`, computed as the kernel of `νP_1 -> νP_0` for a
/// minimal presentation `P_1 -> P_0 -> M -> 0`. Projective summands contribute zero.
pub fn tau(m: &Representation) -> Representation {
    let alg = m.algebra();
    if m.is_zero() {
        return Representation::zero(alg);
    }
    let s0 = syzygy(m);
    let (p1, _, cover1) = projective_cover(&s0.omega);
    if p1.is_empty() {
        return Representation::zero(alg);
    }
    let d = s0.iota.compose(&cover1);
    let pm = ProjMap::from_morphism(alg, &p1, &s0.cover_vertices, &d);
    let nu = pm.nakayama(alg);
    let ip1 = Representation::injective_sum(alg, &p1);
    ip1.kernel(&nu).0
}

/// `τ⁻¹M = Tr D M = D τ_{A^op} D M`.
pub fn tau_inverse(m: &Representation) -> Representation {
    tau(&m.dual()).dual()
}

/// `0 -> MeA -> M -> M/MeA -> 0` for `e` the sum of the vertex idempotents in `e`.
pub fn canonical_sequence(m: &Representation, e: &[usize]) -> ShortExactSequence {
    let gens: Vec<Vec<Vec<Fp>>> = (0..m.dims().len())
        .map(|v| {
            if e.contains(&v) {
                (0..m.dims()[v])
                    .map(|i| {
                        let mut x = vec![0; m.dims()[v]];
                        x[i] = 1;
                        x
                    })
                    .collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    let basis = m.generated_submodule(&gens);
    let (sub, iota) = m.submodule(&basis);
    let q = m.quotient(&basis);
    ShortExactSequence { left: sub, middle: m.clone(), right: q.module, iota, pi: q.projection }
}
