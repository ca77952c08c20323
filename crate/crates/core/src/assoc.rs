//! Finite-dimensional associative algebras given by structure constants.
//!
//! Every basis element lives in a single Peirce block `e_l A e_r`; the product
//! `x * y` follows the path convention (`x` first, then `y`), so for endomorphism
//! algebras `x * y` is the composite `x ∘ y`.

use crate::error::{Error, Result};
use crate::exactla::{Echelon, Fp, Matrix, PrimeField};

pub type SparseVec = Vec<(usize, Fp)>;

#[derive(Clone, Debug)]
pub struct AssociativeAlgebra {
    field: PrimeField,
    labels: Vec<String>,
    left: Vec<usize>,
    right: Vec<usize>,
    idempotents: Vec<Vec<Fp>>,
    mult: Vec<Vec<SparseVec>>,
}

impl AssociativeAlgebra {
    pub fn new(
        field: PrimeField,
        labels: Vec<String>,
        left: Vec<usize>,
        right: Vec<usize>,
        idempotents: Vec<Vec<Fp>>,
        mult: Vec<Vec<SparseVec>>,
    ) -> Self {
        let n = labels.len();
        assert!(left.len() == n && right.len() == n && mult.len() == n);
        assert!(idempotents.iter().all(|e| e.len() == n));
        AssociativeAlgebra { field, labels, left, right, idempotents, mult }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn vertex_count(&self) -> usize {
        self.idempotents.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn left(&self, b: usize) -> usize {
        self.left[b]
    }
    pub fn right(&self, b: usize) -> usize {
        self.right[b]
    }
    pub fn idempotent(&self, v: usize) -> &[Fp] {
        &self.idempotents[v]
    }

    /// Basis indices of the block `e_l A e_r`.
    pub fn block(&self, l: usize, r: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.left[b] == l && self.right[b] == r).collect()
    }

    pub fn cartan(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut c = vec![vec![0; n]; n];
        for b in 0..self.dim() {
            c[self.left[b]][self.right[b]] += 1;
        }
        c
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    pub fn mul(&self, x: &[Fp], y: &[Fp]) -> Vec<Fp> {
        let f = self.field;
        let mut out = vec![0; self.dim()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 || self.right[i] != self.left[j] {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in &self.mult[i][j] {
                    out[k] = f.mul_add(out[k], ab, c);
                }
            }
        }
        out
    }

    pub fn unit(&self, b: usize) -> Vec<Fp> {
        let mut v = vec![0; self.dim()];
        v[b] = 1;
        v
    }

    pub fn one(&self) -> Vec<Fp> {
        let f = self.field;
        let mut v = vec![0; self.dim()];
        for e in &self.idempotents {
            for (x, &y) in v.iter_mut().zip(e) {
                *x = f.add(*x, y);
            }
        }
        v
    }

    /// Associativity on basis triples, orthogonality of idempotents, unit law.
    pub fn check_axioms(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
                    if self.mul(&self.mul(&x, &y), &z) != self.mul(&x, &self.mul(&y, &z)) {
                        return Err(Error::InvalidInput(format!("not associative at ({i},{j},{k})")));
                    }
                }
            }
        }
        let one = self.one();
        for i in 0..d {
            let x = self.unit(i);
            if self.mul(&one, &x) != x || self.mul(&x, &one) != x {
                return Err(Error::InvalidInput("idempotents do not sum to the identity".into()));
            }
        }
        for (a, ea) in self.idempotents.iter().enumerate() {
            for (b, eb) in self.idempotents.iter().enumerate() {
                let p = self.mul(ea, eb);
                let expect = if a == b { ea.clone() } else { vec![0; d] };
                if p != expect {
                    return Err(Error::InvalidInput("idempotents are not orthogonal".into()));
                }
            }
        }
        Ok(())
    }

    pub fn opposite(&self) -> AssociativeAlgebra {
        let d = self.dim();
        let mult = (0..d).map(|i| (0..d).map(|j| self.mult[j][i].clone()).collect()).collect();
        AssociativeAlgebra {
            field: self.field,
            labels: self.labels.clone(),
            left: self.right.clone(),
            right: self.left.clone(),
            idempotents: self.idempotents.clone(),
            mult,
        }
    }

    /// Basis of the two-sided ideal generated by the idempotents `e_v`, `v ∈ set`.
    pub fn idempotent_ideal(&self, set: &[usize]) -> Vec<Vec<Fp>> {
        let d = self.dim();
        let mut ech = Echelon::new(self.field, d);
        for i in 0..d {
            if !set.contains(&self.right[i]) {
                continue;
            }
            for j in 0..d {
                if self.left[j] != self.right[i] {
                    continue;
                }
                let mut v = vec![0; d];
                for &(k, c) in &self.mult[i][j] {
                    v[k] = c;
                }
                ech.insert(v);
            }
        }
        ech.basis()
    }

    /// `A / ⟨e_S⟩`; surviving vertices keep their relative order.
    pub fn quotient_by_idempotents(&self, set: &[usize]) -> AssociativeAlgebra {
        let ideal = self.idempotent_ideal(set);
        self.quotient(&ideal, set)
    }

    /// Quotient by a block-homogeneous two-sided ideal that contains `e_v` for `v ∈ dropped`.
    pub fn quotient(&self, ideal: &[Vec<Fp>], dropped: &[usize]) -> AssociativeAlgebra {
        let f = self.field;
        let d = self.dim();
        let keep_v: Vec<usize> = (0..self.vertex_count()).filter(|v| !dropped.contains(v)).collect();
        let new_v = |v: usize| keep_v.iter().position(|&w| w == v);
        // reversed column order so that pivots land on late basis elements and the
        // early ones (identities first in endomorphism bases) survive
        let rev = |v: &[Fp]| -> Vec<Fp> { v.iter().rev().copied().collect() };
        let mut ech = Echelon::new(f, d);
        for v in ideal {
            ech.insert(rev(v));
        }
        let pivot_cols: Vec<usize> = {
            let mut piv = vec![false; d];
            for row in ech.basis() {
                let pc = row.iter().position(|&x| x != 0).unwrap();
                piv[d - 1 - pc] = true;
            }
            (0..d).filter(|&i| piv[i]).collect()
        };
        let kept: Vec<usize> = (0..d)
            .filter(|i| !pivot_cols.contains(i))
            .filter(|&i| new_v(self.left[i]).is_some() && new_v(self.right[i]).is_some())
            .collect();
        let reduce = |x: &[Fp]| -> Vec<Fp> {
            let r = ech.reduce(rev(x));
            let r: Vec<Fp> = r.into_iter().rev().collect();
            kept.iter().map(|&i| r[i]).collect()
        };
        let to_sparse = |v: Vec<Fp>| -> SparseVec {
            v.into_iter().enumerate().filter(|(_, c)| *c != 0).collect()
        };
        let mult = kept
            .iter()
            .map(|&i| {
                kept.iter()
                    .map(|&j| {
                        if self.right[i] != self.left[j] {
                            return Vec::new();
                        }
                        let mut prod = vec![0; d];
                        for &(k, c) in &self.mult[i][j] {
                            prod[k] = c;
                        }
                        to_sparse(reduce(&prod))
                    })
                    .collect()
            })
            .collect();
        AssociativeAlgebra {
            field: f,
            labels: kept.iter().map(|&i| self.labels[i].clone()).collect(),
            left: kept.iter().map(|&i| new_v(self.left[i]).unwrap()).collect(),
            right: kept.iter().map(|&i| new_v(self.right[i]).unwrap()).collect(),
            idempotents: keep_v.iter().map(|&v| reduce(&self.idempotents[v])).collect(),
            mult,
        }
    }

    /// Sub-algebra `eAe` for `e = Σ_{v ∈ keep} e_v`, on the basis elements of the kept blocks.
    pub fn corner(&self, keep: &[usize]) -> AssociativeAlgebra {
        let basis: Vec<usize> = (0..self.dim())
            .filter(|&b| keep.contains(&self.left[b]) && keep.contains(&self.right[b]))
            .collect();
        let pos = |b: usize| basis.iter().position(|&x| x == b).unwrap();
        let nv = |v: usize| keep.iter().position(|&w| w == v).unwrap();
        let mult = basis
            .iter()
            .map(|&i| {
                basis.iter().map(|&j| self.mult[i][j].iter().map(|&(k, c)| (pos(k), c)).collect()).collect()
            })
            .collect();
        AssociativeAlgebra {
            field: self.field,
            labels: basis.iter().map(|&b| self.labels[b].clone()).collect(),
            left: basis.iter().map(|&b| nv(self.left[b])).collect(),
            right: basis.iter().map(|&b| nv(self.right[b])).collect(),
            idempotents: keep.iter().map(|&v| basis.iter().map(|&b| self.idempotents[v][b]).collect()).collect(),
            mult,
        }
    }

    /// Left multiplication by `x` restricted to the block `e_l A e_l`, as a matrix on block coordinates.
    fn left_mult_on_block(&self, x: &[Fp], block: &[usize]) -> Matrix {
        let f = self.field;
        let n = block.len();
        let mut m = Matrix::zeros(f, n, n);
        for (c, &b) in block.iter().enumerate() {
            let prod = self.mul(x, &self.unit(b));
            for (r, &bb) in block.iter().enumerate() {
                m.set(r, c, prod[bb]);
            }
        }
        m
    }

    /// The Jacobson radical, assuming the idempotents are primitive, pairwise non-isomorphic
    /// and every local corner has residue field k.
    ///
    /// Off-diagonal blocks are radical; in a diagonal block every `x` is `λ e + nilpotent`.
    pub fn radical(&self) -> Result<Vec<Vec<Fp>>> {
        let f = self.field;
        let d = self.dim();
        let mut rad = Echelon::new(f, d);
        for b in 0..d {
            if self.left[b] != self.right[b] {
                rad.insert(self.unit(b));
            }
        }
        for v in 0..self.vertex_count() {
            for y in self.corner_radical(v)? {
                rad.insert(y);
            }
        }
        let basis = rad.basis();
        if !self.is_nilpotent_span(&basis) {
            return Err(Error::NotSplitBasic("radical candidate is not nilpotent".into()));
        }
        Ok(basis)
    }

    /// Radical of the local corner `e_v A e_v`; errors if the corner is not local with
    /// residue field k.
    pub fn corner_radical(&self, v: usize) -> Result<Vec<Vec<Fp>>> {
        let f = self.field;
        let d = self.dim();
        let block = self.block(v, v);
        let e = &self.idempotents[v];
        if block.is_empty() || e.iter().all(|&c| c == 0) {
            return Err(Error::NotSplitBasic(format!("vertex {} has a zero idempotent", v + 1)));
        }
        let mut local = Echelon::new(f, d);
        for &b in &block {
            let x = self.unit(b);
            let lx = self.left_mult_on_block(&x, &block);
            let lambda = single_eigenvalue(&lx).ok_or_else(|| {
                Error::NotSplitBasic(format!("corner at vertex {} is not local with residue field k", v + 1))
            })?;
            let mut y = x;
            for (yi, &ei) in y.iter_mut().zip(e) {
                *yi = f.sub(*yi, f.mul(lambda, ei));
            }
            local.insert(y);
        }
        if local.dim() + 1 != block.len() {
            return Err(Error::NotSplitBasic(format!(
                "corner at vertex {} has semisimple quotient of dimension {}",
                v + 1,
                block.len() - local.dim()
            )));
        }
        let basis = local.basis();
        if !self.is_nilpotent_span(&basis) {
            return Err(Error::NotSplitBasic(format!("corner at vertex {} is not local", v + 1)));
        }
        Ok(basis)
    }

    /// Products of length `dim + 1` of elements from `span` vanish.
    pub fn is_nilpotent_span(&self, span: &[Vec<Fp>]) -> bool {
        let mut power = span.to_vec();
        for _ in 0..=self.dim() {
            if power.is_empty() {
                return true;
            }
            power = self.product_span(&power, span);
        }
        power.is_empty()
    }

    /// Basis of span{ x * y : x ∈ xs, y ∈ ys }.
    pub fn product_span(&self, xs: &[Vec<Fp>], ys: &[Vec<Fp>]) -> Vec<Vec<Fp>> {
        let mut ech = Echelon::new(self.field, self.dim());
        for x in xs {
            for y in ys {
                ech.insert(self.mul(x, y));
            }
        }
        ech.basis()
    }

    pub fn check_split_basic(&self) -> Result<()> {
        self.radical().map(|_| ())
    }
}

/// The unique eigenvalue λ with (m − λ)^n = 0, if one exists in F_p.
pub(crate) fn single_eigenvalue(m: &Matrix) -> Option<Fp> {
    let f = m.field();
    let n = m.rows();
    if n == 0 {
        return None;
    }
    let check = |lambda: Fp| {
        let shifted = m.sub(&Matrix::identity(f, n).scale(lambda));
        shifted.pow(n as u32).is_zero()
    };
    if !(n as u64).is_multiple_of(f.p() as u64) {
        let lambda = f.mul(m.trace(), f.inv((n as u64 % f.p() as u64) as Fp));
        return check(lambda).then_some(lambda);
    }
    (0..f.p()).find(|&l| check(l))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// k × k with basis e1, e2.
    fn k_times_k() -> AssociativeAlgebra {
        let f = PrimeField::default();
        AssociativeAlgebra::new(
            f,
            vec!["e1".into(), "e2".into()],
            vec![0, 1],
            vec![0, 1],
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![vec![(0, 1)], vec![]], vec![vec![], vec![(1, 1)]]],
        )
    }

    /// kA_2 as e1, e2, a with a = e1 a e2.
    fn ka2() -> AssociativeAlgebra {
        let f = PrimeField::default();
        let mut mult = vec![vec![Vec::new(); 3]; 3];
        mult[0][0] = vec![(0, 1)];
        mult[1][1] = vec![(1, 1)];
        mult[0][2] = vec![(2, 1)];
        mult[2][1] = vec![(2, 1)];
        AssociativeAlgebra::new(
            f,
            vec!["e1".into(), "e2".into(), "a".into()],
            vec![0, 1, 0],
            vec![0, 1, 1],
            vec![vec![1, 0, 0], vec![0, 1, 0]],
            mult,
        )
    }

    #[test]
    fn axioms_and_radical() {
        let a = ka2();
        a.check_axioms().unwrap();
        let rad = a.radical().unwrap();
        assert_eq!(rad, vec![vec![0, 0, 1]]);
        assert!(k_times_k().radical().unwrap().is_empty());
    }

    #[test]
    fn idempotent_quotient_and_corner() {
        let a = ka2();
        let q = a.quotient_by_idempotents(&[0]);
        assert_eq!(q.dim(), 1);
        assert_eq!(q.vertex_count(), 1);
        q.check_axioms().unwrap();
        let c = a.corner(&[1]);
        assert_eq!(c.dim(), 1);
        let full = a.corner(&[0, 1]);
        assert_eq!(full.dim(), 3);
        assert_eq!(a.opposite().opposite().mul_basis(0, 2), a.mul_basis(0, 2));
    }

    #[test]
    fn non_local_corner_rejected() {
        // M_2(k) presented with one idempotent: not basic
        let f = PrimeField::default();
        let idx = |i: usize, j: usize| 2 * i + j;
        let mut mult = vec![vec![Vec::new(); 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    mult[idx(i, j)][idx(j, k)] = vec![(idx(i, k), 1)];
                }
            }
        }
        let m2 = AssociativeAlgebra::new(
            f,
            (0..4).map(|i| format!("E{i}")).collect(),
            vec![0; 4],
            vec![0; 4],
            vec![vec![1, 0, 0, 1]],
            mult,
        );
        m2.check_axioms().unwrap();
        assert!(matches!(m2.radical(), Err(Error::NotSplitBasic(_))));
    }
}
