//! Finite-dimensional bound quiver algebras `kQ/I`.
//!
//! Paths compose in traversal order, so the product of basis paths `p * q` is the
//! concatenation "p then q" reduced modulo the ideal. Right modules are representations
//! with an arrow `a: s -> t` acting as a linear map `M_s -> M_t`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, Weak};

use crate::assoc::{AssociativeAlgebra, SparseVec};
use crate::error::{Error, Result};
use crate::exactla::{Echelon, Fp, PrimeField};
use crate::quiver::{Path, Quiver, Relation};

pub type Algebra = Arc<BoundQuiverAlgebra>;

pub const DEFAULT_MAX_PATH_LEN: usize = 30;

/// Hard stop on the number of paths considered while reducing relations.
const PATH_LIMIT: usize = 200_000;

#[derive(Debug)]
pub struct BoundQuiverAlgebra {
    field: PrimeField,
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    mult: Vec<Vec<SparseVec>>,
    blocks: Vec<Vec<Vec<usize>>>,
    block_pos: Vec<usize>,
    /// every path of length >= loewy_bound is zero
    loewy_bound: usize,
    opposite: OnceLock<Algebra>,
    opposite_of: OnceLock<Weak<BoundQuiverAlgebra>>,
}

fn path_key(q: &Quiver, p: &Path) -> (usize, Vec<String>) {
    (p.len(), p.arrows.iter().map(|&a| q.arrow(a).name.clone()).collect())
}

/// All paths of length `< limit`, grouped by length.
fn paths_below(q: &Quiver, limit: usize) -> Result<Vec<Vec<Path>>> {
    let mut by_len: Vec<Vec<Path>> = vec![(0..q.vertex_count()).map(Path::trivial).collect()];
    let mut total = by_len[0].len();
    for len in 1..limit {
        let mut next = Vec::new();
        for p in &by_len[len - 1] {
            for (ai, a) in q.arrows().iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path { source: p.source, target: a.target, arrows });
                }
            }
        }
        total += next.len();
        if total > PATH_LIMIT {
            return Err(Error::NotFiniteDimensional(len));
        }
        if next.is_empty() {
            break;
        }
        by_len.push(next);
    }
    Ok(by_len)
}

impl BoundQuiverAlgebra {
    /// Builds `kQ/I` for the ideal generated by `rels`.
    ///
    /// For increasing truncation `N` the image of `I` in `kQ/R^N` is spanned degree by degree
    /// by `u r v`; once every path of length `N-1` lies in it, `R^{N-1} ⊆ I` and the normal
    /// words below that length form the basis.
    pub fn build(field: PrimeField, quiver: Quiver, rels: Vec<Relation>, max_len: usize) -> Result<Algebra> {
        let mut relations = Vec::new();
        for r in rels {
            let r = r.normalized(field);
            if r.terms.is_empty() {
                continue;
            }
            r.validate(&quiver)?;
            relations.push(r);
        }
        for n in 2..=max_len + 1 {
            let by_len = paths_below(&quiver, n)?;
            let all: Vec<&Path> = by_len.iter().flatten().collect();
            // descending (length, names): the pivot of a relation is its leading path
            let mut order: Vec<usize> = (0..all.len()).collect();
            order.sort_by(|&x, &y| path_key(&quiver, all[y]).cmp(&path_key(&quiver, all[x])));
            let coord: HashMap<&Path, usize> =
                order.iter().enumerate().map(|(c, &i)| (all[i], c)).collect();
            let mut ech = Echelon::new(field, all.len());
            for r in &relations {
                let min_len = r.terms.iter().map(|(_, p)| p.len()).min().unwrap();
                let (rs, rt) = r.validate(&quiver)?;
                for u in all.iter().filter(|u| u.target == rs) {
                    for v in all.iter().filter(|v| v.source == rt) {
                        if u.len() + v.len() + min_len >= n {
                            continue;
                        }
                        let mut vec = vec![0; all.len()];
                        for (c, p) in &r.terms {
                            if u.len() + v.len() + p.len() >= n {
                                continue;
                            }
                            let mut arrows = u.arrows.clone();
                            arrows.extend_from_slice(p);
                            arrows.extend_from_slice(&v.arrows);
                            let path = Path { source: u.source, target: v.target, arrows };
                            let k = coord[&path];
                            vec[k] = field.add(vec[k], *c);
                        }
                        ech.insert(vec);
                    }
                }
            }
            let top = by_len.get(n - 1).map(|v| v.as_slice()).unwrap_or(&[]);
            let saturated = top.iter().all(|p| {
                let mut e = vec![0; all.len()];
                e[coord[p]] = 1;
                ech.contains(&e)
            });
            if !saturated {
                continue;
            }
            return Ok(Arc::new(Self::from_echelon(field, quiver, relations, &all, &coord, &ech, n - 1)));
        }
        Err(Error::NotFiniteDimensional(max_len))
    }

    fn from_echelon(
        field: PrimeField,
        quiver: Quiver,
        relations: Vec<Relation>,
        all: &[&Path],
        coord: &HashMap<&Path, usize>,
        ech: &Echelon,
        loewy_bound: usize,
    ) -> Self {
        let pivots: std::collections::HashSet<usize> = ech
            .basis()
            .iter()
            .map(|row| row.iter().position(|&x| x != 0).unwrap())
            .collect();
        let mut basis: Vec<Path> = all
            .iter()
            .filter(|p| p.len() < loewy_bound && !pivots.contains(&coord[*p]))
            .map(|p| (*p).clone())
            .collect();
        let key = |p: &Path| match p.len() {
            0 => (0, p.source, Vec::new()),
            1 => (1, p.arrows[0], Vec::new()),
            l => (l, 0, path_key(&quiver, p).1),
        };
        basis.sort_by_key(|p| key(p));
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut by_coord: Vec<&Path> = all.to_vec();
        for p in all {
            by_coord[coord[p]] = p;
        }
        let reduce = |p: &Path| -> SparseVec {
            if p.len() >= loewy_bound {
                return Vec::new();
            }
            let mut e = vec![0; all.len()];
            e[coord[p]] = 1;
            let r = ech.reduce(e);
            let mut out: SparseVec = Vec::new();
            for (c, &x) in r.iter().enumerate() {
                if x != 0 {
                    // non-pivot coordinates below the bound are exactly the basis paths
                    out.push((index[by_coord[c]], x));
                }
            }
            out.sort();
            out
        };
        let d = basis.len();
        let mut mult = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                if let Some(p) = basis[i].concat(&basis[j]) {
                    mult[i][j] = reduce(&p);
                }
            }
        }
        let n = quiver.vertex_count();
        let mut blocks = vec![vec![Vec::new(); n]; n];
        let mut block_pos = vec![0; d];
        for (b, p) in basis.iter().enumerate() {
            block_pos[b] = blocks[p.source][p.target].len();
            blocks[p.source][p.target].push(b);
        }
        BoundQuiverAlgebra {
            field,
            quiver,
            relations,
            basis,
            index,
            mult,
            blocks,
            block_pos,
            loewy_bound,
            opposite: OnceLock::new(),
            opposite_of: OnceLock::new(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }
    pub fn loewy_bound(&self) -> usize {
        self.loewy_bound
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Basis indices of `e_l A e_r`, i.e. residue paths from `l` to `r`.
    pub fn block(&self, l: usize, r: usize) -> &[usize] {
        &self.blocks[l][r]
    }

    /// Position of basis element `b` inside its block.
    pub fn block_pos(&self, b: usize) -> usize {
        self.block_pos[b]
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    /// Product of `x ∈ e_a A e_b` and `y ∈ e_b A e_c` in block coordinates.
    pub fn mul_block(&self, a: usize, b: usize, c: usize, x: &[Fp], y: &[Fp]) -> Vec<Fp> {
        let f = self.field;
        let (bx, by) = (self.block(a, b), self.block(b, c));
        let mut out = vec![0; self.block(a, c).len()];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let s = f.mul(xi, yj);
                for &(k, c) in &self.mult[bx[i]][by[j]] {
                    let pos = self.block_pos[k];
                    out[pos] = f.mul_add(out[pos], s, c);
                }
            }
        }
        out
    }

    /// Reduces an arbitrary path to basis coordinates.
    pub fn reduce_path(&self, p: &Path) -> SparseVec {
        if p.is_trivial() {
            return vec![(self.index[p], 1)];
        }
        let f = self.field;
        let mut acc: Vec<Fp> = vec![0; self.dim()];
        acc[self.index[&Path::trivial(p.source)]] = 1;
        let mut at = p.source;
        for &a in &p.arrows {
            let ai = self.index[&Path { source: at, target: self.quiver.arrow(a).target, arrows: vec![a] }];
            let mut next = vec![0; self.dim()];
            for (i, &c) in acc.iter().enumerate() {
                if c != 0 {
                    for &(k, m) in &self.mult[i][ai] {
                        next[k] = f.mul_add(next[k], c, m);
                    }
                }
            }
            acc = next;
            at = self.quiver.arrow(a).target;
        }
        acc.into_iter().enumerate().filter(|(_, c)| *c != 0).collect()
    }

    /// Basis index of the arrow with the given quiver index.
    pub fn arrow_basis(&self, a: usize) -> usize {
        let arr = self.quiver.arrow(a);
        self.index[&Path { source: arr.source, target: arr.target, arrows: vec![a] }]
    }

    pub fn idempotent_basis(&self, v: usize) -> usize {
        self.index[&Path::trivial(v)]
    }

    pub fn cartan(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|row| row.iter().map(Vec::len).collect()).collect()
    }

    pub fn basis_label(&self, b: usize) -> String {
        self.basis[b].display(&self.quiver).to_string()
    }

    /// Opposite algebra: reversed arrows (same names and indices) and reversed relations.
    pub fn opposite(self: &Arc<Self>) -> Algebra {
        if let Some(orig) = self.opposite_of.get().and_then(Weak::upgrade) {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let rels = self.relations.iter().map(Relation::reversed).collect();
                let op = Self::build(self.field, self.quiver.opposite(), rels, self.loewy_bound + 1)
                    .expect("opposite of a finite-dimensional algebra is finite-dimensional");
                let _ = op.opposite_of.set(Arc::downgrade(self));
                op
            })
            .clone()
    }

    /// Same algebra, as an abstract algebra with the trivial paths as idempotents.
    pub fn to_assoc(&self) -> AssociativeAlgebra {
        let d = self.dim();
        let idempotents = (0..self.vertex_count())
            .map(|v| {
                let mut e = vec![0; d];
                e[self.idempotent_basis(v)] = 1;
                e
            })
            .collect();
        AssociativeAlgebra::new(
            self.field,
            (0..d).map(|b| self.basis_label(b)).collect(),
            self.basis.iter().map(|p| p.source).collect(),
            self.basis.iter().map(|p| p.target).collect(),
            idempotents,
            self.mult.clone(),
        )
    }

    /// `A/⟨e⟩` for `e` the sum of the vertex idempotents in `cut`. Vertices are renumbered
    /// in increasing order; arrow names are kept.
    pub fn idempotent_quotient(&self, cut: &[usize]) -> Result<Algebra> {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|v| !cut.contains(v)).collect();
        let new_v = |v: usize| keep.iter().position(|&w| w == v);
        let mut q = Quiver::new(keep.len());
        let mut arrow_map = HashMap::new();
        for (ai, a) in self.quiver.arrows().iter().enumerate() {
            if let (Some(s), Some(t)) = (new_v(a.source), new_v(a.target)) {
                arrow_map.insert(ai, q.add_arrow(&a.name, s, t)?);
            }
        }
        let rels = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .filter(|(_, p)| p.iter().all(|a| arrow_map.contains_key(a)))
                    .map(|(c, p)| (*c, p.iter().map(|a| arrow_map[a]).collect()))
                    .collect(),
            })
            .filter(|r| !r.terms.is_empty())
            .collect();
        Self::build(self.field, q, rels, self.loewy_bound + 1)
    }

    /// `eAe` for `e` the sum of the vertex idempotents in `keep`.
    pub fn corner_algebra(&self, keep: &[usize]) -> AssociativeAlgebra {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        self.to_assoc().corner(&keep)
    }

    /// Structural equality of presentations (same quiver, field and path basis).
    pub fn same_presentation(&self, other: &BoundQuiverAlgebra) -> bool {
        self.field == other.field && self.quiver == other.quiver && self.basis == other.basis
    }
}

/// Convenience wrapper around [`BoundQuiverAlgebra::build`].
pub fn build_algebra(field: PrimeField, quiver: Quiver, rels: Vec<Relation>, max_len: usize) -> Result<Algebra> {
    BoundQuiverAlgebra::build(field, quiver, rels, max_len)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Linear quiver n -> n-1 -> ... -> 1 with arrow a{i}: i+1 -> i.
    fn linear(n: usize) -> Quiver {
        let mut q = Quiver::new(n);
        for i in 1..n {
            q.add_arrow(&format!("a{i}"), i, i - 1).unwrap();
        }
        q
    }

    fn rel(q: &Quiver, names: &[&str]) -> Relation {
        Relation::monomial(names.iter().map(|n| q.arrow_index(n).unwrap()).collect())
    }

    #[test]
    fn linear_a2_has_three_paths() {
        let a = build_algebra(PrimeField::default(), linear(2), vec![], 30).unwrap();
        assert_eq!(a.dim(), 3);
        let labels: Vec<String> = (0..3).map(|b| a.basis_label(b)).collect();
        assert_eq!(labels, ["e1", "e2", "a1"]);
        a.to_assoc().check_axioms().unwrap();
    }

    #[test]
    fn path_enumeration_oracle() {
        let q = linear(4);
        let r = rel(&q, &["a2", "a1"]);
        let a43 = build_algebra(PrimeField::default(), q.clone(), vec![r.clone()], 30).unwrap();
        // 4 trivial + 3 arrows + 1 surviving length-two path (4 -> 3 -> 2)
        assert_eq!(a43.dim(), 8);
        let r2 = rel(&q, &["a3", "a2"]);
        let a44 = build_algebra(PrimeField::default(), q, vec![r, r2], 30).unwrap();
        assert_eq!(a44.dim(), 7);
        assert_eq!(a43.opposite().dim(), 8);
        a43.to_assoc().check_axioms().unwrap();
    }

    #[test]
    fn commutativity_relation() {
        // square 1 -> 2 -> 4, 1 -> 3 -> 4 with ab = cd
        let mut q = Quiver::new(4);
        let a = q.add_arrow("a", 0, 1).unwrap();
        let b = q.add_arrow("b", 1, 3).unwrap();
        let c = q.add_arrow("c", 0, 2).unwrap();
        let d = q.add_arrow("d", 2, 3).unwrap();
        let f = PrimeField::default();
        let r = Relation { terms: vec![(1, vec![a, b]), (f.neg(1), vec![c, d])] };
        let alg = build_algebra(f, q, vec![r], 30).unwrap();
        assert_eq!(alg.dim(), 9);
        let ab = alg.reduce_path(&Path { source: 0, target: 3, arrows: vec![a, b] });
        let cd = alg.reduce_path(&Path { source: 0, target: 3, arrows: vec![c, d] });
        assert_eq!(ab, cd);
        alg.to_assoc().check_axioms().unwrap();
    }

    #[test]
    fn loop_with_nilpotent_relation() {
        let mut q = Quiver::new(1);
        let x = q.add_arrow("x", 0, 0).unwrap();
        let alg = build_algebra(PrimeField::default(), q.clone(), vec![Relation::monomial(vec![x, x, x])], 30).unwrap();
        assert_eq!(alg.dim(), 3);
        assert!(matches!(build_algebra(PrimeField::default(), q, vec![], 10), Err(Error::NotFiniteDimensional(_))));
    }

    #[test]
    fn quotients_and_corners() {
        let q = linear(4);
        let r = rel(&q, &["a2", "a1"]);
        let a43 = build_algebra(PrimeField::default(), q, vec![r], 30).unwrap();
        let quo = a43.idempotent_quotient(&[3]).unwrap();
        assert_eq!(quo.dim(), 5);
        assert_eq!(quo.relations().len(), 1);
        assert_eq!(a43.idempotent_quotient(&[]).unwrap().dim(), a43.dim());
        assert_eq!(a43.idempotent_quotient(&[0, 1, 2, 3]).unwrap().dim(), 0);

        let a3 = build_algebra(PrimeField::default(), linear(3), vec![], 30).unwrap();
        let c = a3.corner_algebra(&[0, 2]);
        assert_eq!(c.dim(), 3);
        assert_eq!(c.cartan(), vec![vec![1, 0], vec![1, 1]]);
        let a2 = build_algebra(PrimeField::default(), linear(2), vec![], 30).unwrap();
        assert_eq!(a2.idempotent_quotient(&[1]).unwrap().dim(), 1);
    }

    #[test]
    fn opposite_is_an_involution() {
        let q = linear(4);
        let r = rel(&q, &["a2", "a1"]);
        let a = build_algebra(PrimeField::default(), q, vec![r], 30).unwrap();
        let op = a.opposite();
        assert!(Arc::ptr_eq(&op.opposite(), &a));
        assert_eq!(op.quiver().arrow(0).source, 0);
        assert_eq!(op.quiver().arrow(0).target, 1);
    }
}
