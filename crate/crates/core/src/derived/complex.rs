//! Bounded complexes of projectives, chain maps up to homotopy, mapping cones and cohomology.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::exactla::{extend_basis, Echelon, Fp, Matrix};
use crate::module::{ProjMap, Representation};

/// `⋯ -> P^d -> P^{d+1} -> ⋯` with `P^d = ⊕ P(v)` for `v` in `terms[d - lo]`.
#[derive(Clone, Debug)]
pub struct ProjComplex {
    pub lo: i32,
    pub terms: Vec<Vec<usize>>,
    /// `diffs[k]: terms[k] -> terms[k + 1]`
    pub diffs: Vec<ProjMap>,
}

impl ProjComplex {
    pub fn zero() -> Self {
        ProjComplex { lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// Drops empty terms at both ends.
    pub fn new(lo: i32, mut terms: Vec<Vec<usize>>, mut diffs: Vec<ProjMap>) -> Self {
        debug_assert_eq!(diffs.len(), terms.len().saturating_sub(1));
        while terms.last().is_some_and(Vec::is_empty) {
            terms.pop();
            diffs.pop();
        }
        let lead = terms.iter().take_while(|t| t.is_empty()).count();
        if lead == terms.len() {
            return Self::zero();
        }
        terms.drain(..lead);
        diffs.drain(..lead);
        ProjComplex { lo: lo + lead as i32, terms, diffs }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Last degree with a nonzero term (meaningless for the zero complex).
    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn term(&self, d: i32) -> &[usize] {
        if d < self.lo || d > self.hi() {
            &[]
        } else {
            &self.terms[(d - self.lo) as usize]
        }
    }

    /// The differential leaving degree `d`, if both ends are inside the complex.
    pub fn diff(&self, d: i32) -> Option<&ProjMap> {
        if d < self.lo || d >= self.hi() {
            None
        } else {
            Some(&self.diffs[(d - self.lo) as usize])
        }
    }

    fn diff_or_zero(&self, alg: &Algebra, d: i32) -> ProjMap {
        self.diff(d).cloned().unwrap_or_else(|| ProjMap::zero(alg, self.term(d), self.term(d + 1)))
    }

    /// `X[k]`: degrees move down by `k`, differentials pick up the sign `(-1)^k`.
    pub fn shift(&self, alg: &Algebra, k: i32) -> ProjComplex {
        let diffs = if k % 2 == 0 {
            self.diffs.clone()
        } else {
            self.diffs.iter().map(|d| d.scale(alg, alg.field().neg(1))).collect()
        };
        ProjComplex { lo: self.lo - k, terms: self.terms.clone(), diffs }
    }

    pub fn direct_sum(alg: &Algebra, parts: &[&ProjComplex]) -> ProjComplex {
        let parts: Vec<&&ProjComplex> = parts.iter().filter(|c| !c.is_zero()).collect();
        if parts.is_empty() {
            return Self::zero();
        }
        let lo = parts.iter().map(|c| c.lo).min().unwrap();
        let hi = parts.iter().map(|c| c.hi()).max().unwrap();
        let terms: Vec<Vec<usize>> =
            (lo..=hi).map(|d| parts.iter().flat_map(|c| c.term(d).iter().copied()).collect()).collect();
        let diffs = (lo..hi)
            .map(|d| {
                let mut m = ProjMap::zero(alg, &terms[(d - lo) as usize], &terms[(d + 1 - lo) as usize]);
                let (mut r, mut c) = (0, 0);
                for p in &parts {
                    if let Some(x) = p.diff(d) {
                        place(&mut m, r, c, x);
                    }
                    r += p.term(d + 1).len();
                    c += p.term(d).len();
                }
                m
            })
            .collect();
        ProjComplex::new(lo, terms, diffs)
    }

    /// The identity chain map.
    pub fn identity(&self, alg: &Algebra) -> ChainMap {
        ChainMap {
            comps: (self.lo..=self.hi()).map(|d| (d, ProjMap::identity(alg, self.term(d)))).collect(),
        }
    }

    /// Cohomology modules `H^d`, nonzero ones only.
    pub fn cohomology(&self, alg: &Algebra) -> Vec<(i32, Representation)> {
        let mut out = Vec::new();
        if self.is_zero() {
            return out;
        }
        for d in self.lo..=self.hi() {
            let p = Representation::projective_sum(alg, self.term(d));
            let out_map = self.diff_or_zero(alg, d).to_morphism(alg);
            let (k, incl) = p.kernel(&out_map);
            if k.is_zero() {
                continue;
            }
            let h = match self.diff(d - 1) {
                None => k,
                Some(inc) => {
                    let phi = inc.to_morphism(alg);
                    let basis: Vec<Matrix> = phi
                        .maps
                        .iter()
                        .zip(&incl.maps)
                        .map(|(m, i)| i.solve(&m.image_basis()).expect("boundaries lie in the cycles"))
                        .collect();
                    k.quotient(&basis).module
                }
            };
            if !h.is_zero() {
                out.push((d, h));
            }
        }
        out
    }
}

/// Copies the entries of `block` into `m` at summand offsets `(row, col)`.
pub(crate) fn place(m: &mut ProjMap, row: usize, col: usize, block: &ProjMap) {
    for (j, r) in block.entries.iter().enumerate() {
        for (i, e) in r.iter().enumerate() {
            m.entries[row + j][col + i].clone_from(e);
        }
    }
}

/// A chain map, one component per degree; absent degrees are zero.
#[derive(Clone, Debug, Default)]
pub struct ChainMap {
    pub comps: BTreeMap<i32, ProjMap>,
}

impl ChainMap {
    /// `self ∘ other`
    pub fn compose(&self, alg: &Algebra, other: &ChainMap) -> ChainMap {
        let comps = other
            .comps
            .iter()
            .filter_map(|(d, f)| self.comps.get(d).map(|g| (*d, g.compose(alg, f))))
            .collect();
        ChainMap { comps }
    }

    pub fn add(&self, alg: &Algebra, other: &ChainMap) -> ChainMap {
        let mut comps = self.comps.clone();
        for (d, g) in &other.comps {
            let sum = match comps.get(d) {
                Some(f) => f.add(alg, g),
                None => g.clone(),
            };
            comps.insert(*d, sum);
        }
        ChainMap { comps }
    }

    pub fn scale(&self, alg: &Algebra, s: Fp) -> ChainMap {
        ChainMap { comps: self.comps.iter().map(|(d, f)| (*d, f.scale(alg, s))).collect() }
    }

    /// The same map between the shifted complexes `X[k] -> Y[k]` (no sign change).
    pub fn shift(&self, k: i32) -> ChainMap {
        ChainMap { comps: self.comps.iter().map(|(d, f)| (d - k, f.clone())).collect() }
    }

    /// Checks `d_Y f = f d_X`.
    pub fn is_chain_map(&self, alg: &Algebra, x: &ProjComplex, y: &ProjComplex) -> bool {
        if x.is_zero() || y.is_zero() {
            return true;
        }
        let comp = |d: i32| self.comps.get(&d).cloned().unwrap_or_else(|| ProjMap::zero(alg, x.term(d), y.term(d)));
        (x.lo.min(y.lo) - 1..=x.hi().max(y.hi())).all(|d| {
            let lhs = y.diff_or_zero(alg, d).compose(alg, &comp(d));
            let rhs = comp(d + 1).compose(alg, &x.diff_or_zero(alg, d));
            lhs == rhs
        })
    }
}

/// `Hom_{K^b}(X, Y)`: cycles of the Hom complex modulo null-homotopic maps.
#[derive(Clone, Debug)]
pub struct HomSpace {
    alg: Algebra,
    x: ProjComplex,
    y: ProjComplex,
    /// `(degree, offset)` of each component in the coordinate layout
    layout: Vec<(i32, usize)>,
    len: usize,
    boundaries: Echelon,
    basis: Vec<Vec<Fp>>,
}

impl HomSpace {
    pub fn new(alg: &Algebra, x: &ProjComplex, y: &ProjComplex) -> Self {
        let f = alg.field();
        let mut layout = Vec::new();
        let mut len = 0;
        if !x.is_zero() && !y.is_zero() {
            for d in x.lo.max(y.lo)..=x.hi().min(y.hi()) {
                let l = ProjMap::coord_len(alg, x.term(d), y.term(d));
                if l > 0 {
                    layout.push((d, len));
                    len += l;
                }
            }
        }
        let offset = |d: i32| layout.iter().find(|(e, _)| *e == d).map(|&(_, o)| o);
        // cycle equations d_Y f^d - f^{d+1} d_X = 0 in Hom(X^d, Y^{d+1})
        let mut blocks = Vec::new();
        for &(d, _) in &layout {
            blocks.push(d);
            blocks.push(d - 1);
        }
        blocks.sort_unstable();
        blocks.dedup();
        let mut rows = Vec::new();
        for &d in &blocks {
            let rl = ProjMap::coord_len(alg, x.term(d), y.term(d + 1));
            if rl == 0 {
                continue;
            }
            let mut m = Matrix::zeros(f, rl, len);
            if let (Some(o), Some(dy)) = (offset(d), y.diff(d)) {
                m.set_block(0, o, &dy.left_mult_matrix(alg, x.term(d)));
            }
            if let (Some(o), Some(dx)) = (offset(d + 1), x.diff(d)) {
                let r = dx.right_mult_matrix(alg, y.term(d + 1));
                m.set_block(0, o, &r.scale(f.neg(1)));
            }
            rows.push(m);
        }
        let cycles: Vec<Vec<Fp>> = if rows.is_empty() {
            Matrix::identity(f, len).columns()
        } else {
            let refs: Vec<&Matrix> = rows.iter().collect();
            Matrix::vstack(f, len, &refs).kernel_basis().columns()
        };
        // boundaries d_Y h^d + h^{d+1} d_X from h^d in Hom(X^d, Y^{d-1})
        let mut boundaries = Echelon::new(f, len);
        if !x.is_zero() && !y.is_zero() {
            for d in x.lo.max(y.lo + 1)..=x.hi().min(y.hi() + 1) {
                let hl = ProjMap::coord_len(alg, x.term(d), y.term(d - 1));
                if hl == 0 {
                    continue;
                }
                let mut m = Matrix::zeros(f, len, hl);
                if let (Some(o), Some(dy)) = (offset(d), y.diff(d - 1)) {
                    m.set_block(o, 0, &dy.left_mult_matrix(alg, x.term(d)));
                }
                if let (Some(o), Some(dx)) = (offset(d - 1), x.diff(d - 1)) {
                    m.set_block(o, 0, &dx.right_mult_matrix(alg, y.term(d - 1)));
                }
                for c in m.columns() {
                    boundaries.insert(c);
                }
            }
        }
        let basis = extend_basis(f, len, &boundaries.basis(), &cycles)
            .into_iter()
            .map(|i| boundaries.reduce(cycles[i].clone()))
            .collect();
        HomSpace { alg: alg.clone(), x: x.clone(), y: y.clone(), layout, len, boundaries, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn source(&self) -> &ProjComplex {
        &self.x
    }

    pub fn target(&self) -> &ProjComplex {
        &self.y
    }

    fn raw_coords(&self, m: &ChainMap) -> Vec<Fp> {
        let mut v = vec![0; self.len];
        for &(d, o) in &self.layout {
            if let Some(c) = m.comps.get(&d) {
                let cs = c.to_coords();
                v[o..o + cs.len()].copy_from_slice(&cs);
            }
        }
        v
    }

    /// Normal form of the homotopy class of `m`; linear and injective on classes.
    pub fn normal_form(&self, m: &ChainMap) -> Vec<Fp> {
        self.boundaries.reduce(self.raw_coords(m))
    }

    pub fn is_null_homotopic(&self, m: &ChainMap) -> bool {
        self.normal_form(m).iter().all(|&c| c == 0)
    }

    pub fn map_from_coords(&self, v: &[Fp]) -> ChainMap {
        let alg = &self.alg;
        let comps = self
            .layout
            .iter()
            .map(|&(d, o)| {
                let l = ProjMap::coord_len(alg, self.x.term(d), self.y.term(d));
                (d, ProjMap::from_coords(alg, self.x.term(d), self.y.term(d), &v[o..o + l]))
            })
            .collect();
        ChainMap { comps }
    }

    pub fn basis(&self) -> Vec<ChainMap> {
        self.basis.iter().map(|v| self.map_from_coords(v)).collect()
    }

    /// Dimension of the span of the given classes.
    pub fn rank_of(&self, maps: &[ChainMap]) -> usize {
        let mut e = self.boundaries.clone();
        let base = e.dim();
        for m in maps {
            e.insert(self.raw_coords(m));
        }
        e.dim() - base
    }
}

/// Mapping cone `C^d = X^{d+1} ⊕ Y^d` with `d_C = [[-d_X, 0], [f, d_Y]]`, together with the
/// triangle maps `Y -> C` and `C -> X[1]`.
pub fn cone(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, f: &ChainMap) -> (ProjComplex, ChainMap, ChainMap) {
    if x.is_zero() {
        return (y.clone(), y.identity(alg), ChainMap::default());
    }
    if y.is_zero() {
        let c = x.shift(alg, 1);
        let id = c.identity(alg);
        return (c, ChainMap::default(), id);
    }
    let lo = (x.lo - 1).min(y.lo);
    let hi = (x.hi() - 1).max(y.hi());
    let term = |d: i32| -> Vec<usize> { x.term(d + 1).iter().chain(y.term(d)).copied().collect() };
    let terms: Vec<Vec<usize>> = (lo..=hi).map(term).collect();
    let neg = alg.field().neg(1);
    let diffs = (lo..hi)
        .map(|d| {
            let (src, dst) = (term(d), term(d + 1));
            let mut m = ProjMap::zero(alg, &src, &dst);
            let xs = x.term(d + 1).len();
            let xt = x.term(d + 2).len();
            if let Some(dx) = x.diff(d + 1) {
                place(&mut m, 0, 0, &dx.scale(alg, neg));
            }
            if let Some(fd) = f.comps.get(&(d + 1)) {
                place(&mut m, xt, 0, fd);
            }
            if let Some(dy) = y.diff(d) {
                place(&mut m, xt, xs, dy);
            }
            m
        })
        .collect();
    let mut inc = ChainMap::default();
    let mut proj = ChainMap::default();
    for d in lo..=hi {
        let t = term(d);
        let xs = x.term(d + 1).len();
        if !y.term(d).is_empty() {
            let mut m = ProjMap::zero(alg, y.term(d), &t);
            place(&mut m, xs, 0, &ProjMap::identity(alg, y.term(d)));
            inc.comps.insert(d, m);
        }
        if xs > 0 {
            let mut m = ProjMap::zero(alg, &t, x.term(d + 1));
            place(&mut m, 0, 0, &ProjMap::identity(alg, x.term(d + 1)));
            proj.comps.insert(d, m);
        }
    }
    // re-index after trimming: ProjComplex::new only drops empty ends, so degrees agree
    (ProjComplex::new(lo, terms, diffs), inc, proj)
}
