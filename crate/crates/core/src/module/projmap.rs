//! Maps between direct sums of indecomposable projectives, written as matrices of
//! algebra elements. Entry `(j, i)` of a map `⊕ P(u_i) -> ⊕ P(v_j)` is the image of the
//! generator `e_{u_i}` in the `j`-th summand, an element of `e_{v_j} A e_{u_i}`.
//! Composition is the usual matrix product with entries multiplied in path order.

use crate::algebra::BoundQuiverAlgebra;
use crate::exactla::{Fp, Matrix};

use super::ModuleMorphism;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap {
    pub src: Vec<usize>,
    pub dst: Vec<usize>,
    /// `entries[j][i]` in block coordinates of `e_{dst_j} A e_{src_i}`
    pub entries: Vec<Vec<Vec<Fp>>>,
}

impl ProjMap {
    pub fn zero(alg: &BoundQuiverAlgebra, src: &[usize], dst: &[usize]) -> Self {
        let entries = dst
            .iter()
            .map(|&v| src.iter().map(|&u| vec![0; alg.block(v, u).len()]).collect())
            .collect();
        ProjMap { src: src.to_vec(), dst: dst.to_vec(), entries }
    }

    pub fn identity(alg: &BoundQuiverAlgebra, vs: &[usize]) -> Self {
        let mut m = Self::zero(alg, vs, vs);
        for (i, &v) in vs.iter().enumerate() {
            m.entries[i][i][alg.block_pos(alg.idempotent_basis(v))] = 1;
        }
        m
    }

    /// Number of scalar coordinates, `Σ_{j,i} dim e_{dst_j} A e_{src_i}`.
    pub fn coord_len(alg: &BoundQuiverAlgebra, src: &[usize], dst: &[usize]) -> usize {
        dst.iter().map(|&v| src.iter().map(|&u| alg.block(v, u).len()).sum::<usize>()).sum()
    }

    pub fn to_coords(&self) -> Vec<Fp> {
        self.entries.iter().flat_map(|row| row.iter().flat_map(|e| e.iter().copied())).collect()
    }

    pub fn from_coords(alg: &BoundQuiverAlgebra, src: &[usize], dst: &[usize], coords: &[Fp]) -> Self {
        let mut m = Self::zero(alg, src, dst);
        let mut k = 0;
        for row in m.entries.iter_mut() {
            for e in row.iter_mut() {
                let len = e.len();
                e.copy_from_slice(&coords[k..k + len]);
                k += len;
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(|e| e.iter().all(|&x| x == 0)))
    }

    pub fn add(&self, alg: &BoundQuiverAlgebra, other: &ProjMap) -> ProjMap {
        let f = alg.field();
        let c: Vec<Fp> = self.to_coords().iter().zip(other.to_coords()).map(|(&a, b)| f.add(a, b)).collect();
        Self::from_coords(alg, &self.src, &self.dst, &c)
    }

    pub fn scale(&self, alg: &BoundQuiverAlgebra, s: Fp) -> ProjMap {
        let f = alg.field();
        let c: Vec<Fp> = self.to_coords().iter().map(|&a| f.mul(a, s)).collect();
        Self::from_coords(alg, &self.src, &self.dst, &c)
    }

    /// `self ∘ other`
    pub fn compose(&self, alg: &BoundQuiverAlgebra, other: &ProjMap) -> ProjMap {
        assert_eq!(self.src, other.dst, "ProjMap::compose: shapes");
        let f = alg.field();
        let mut out = Self::zero(alg, &other.src, &self.dst);
        for (k, &w) in self.dst.iter().enumerate() {
            for (i, &u) in other.src.iter().enumerate() {
                for (j, &v) in self.src.iter().enumerate() {
                    let prod = alg.mul_block(w, v, u, &self.entries[k][j], &other.entries[j][i]);
                    for (x, y) in out.entries[k][i].iter_mut().zip(prod) {
                        *x = f.add(*x, y);
                    }
                }
            }
        }
        out
    }

    /// Start offsets of each entry `(j, i)` in the coordinate layout.
    pub fn offsets(alg: &BoundQuiverAlgebra, src: &[usize], dst: &[usize]) -> Vec<Vec<usize>> {
        let mut k = 0;
        dst.iter()
            .map(|&v| {
                src.iter()
                    .map(|&u| {
                        let o = k;
                        k += alg.block(v, u).len();
                        o
                    })
                    .collect()
            })
            .collect()
    }

    /// Matrix of `g ↦ self ∘ g`, from coordinates of `Hom(⊕P(src2), ⊕P(self.src))`
    /// to coordinates of `Hom(⊕P(src2), ⊕P(self.dst))`.
    pub fn left_mult_matrix(&self, alg: &BoundQuiverAlgebra, src2: &[usize]) -> Matrix {
        let in_off = Self::offsets(alg, src2, &self.src);
        let out_off = Self::offsets(alg, src2, &self.dst);
        let mut m = Matrix::zeros(
            alg.field(),
            Self::coord_len(alg, src2, &self.dst),
            Self::coord_len(alg, src2, &self.src),
        );
        for (j, &v) in self.src.iter().enumerate() {
            for (i, &u) in src2.iter().enumerate() {
                let len = alg.block(v, u).len();
                for p in 0..len {
                    let mut unit = vec![0; len];
                    unit[p] = 1;
                    for (k, &w) in self.dst.iter().enumerate() {
                        let prod = alg.mul_block(w, v, u, &self.entries[k][j], &unit);
                        for (t, y) in prod.into_iter().enumerate() {
                            if y != 0 {
                                m.set(out_off[k][i] + t, in_off[j][i] + p, y);
                            }
                        }
                    }
                }
            }
        }
        m
    }

    /// Matrix of `g ↦ g ∘ self`, from coordinates of `Hom(⊕P(self.dst), ⊕P(dst2))`
    /// to coordinates of `Hom(⊕P(self.src), ⊕P(dst2))`.
    pub fn right_mult_matrix(&self, alg: &BoundQuiverAlgebra, dst2: &[usize]) -> Matrix {
        let in_off = Self::offsets(alg, &self.dst, dst2);
        let out_off = Self::offsets(alg, &self.src, dst2);
        let mut m = Matrix::zeros(
            alg.field(),
            Self::coord_len(alg, &self.src, dst2),
            Self::coord_len(alg, &self.dst, dst2),
        );
        for (k, &w) in dst2.iter().enumerate() {
            for (j, &v) in self.dst.iter().enumerate() {
                let len = alg.block(w, v).len();
                for p in 0..len {
                    let mut unit = vec![0; len];
                    unit[p] = 1;
                    for (i, &u) in self.src.iter().enumerate() {
                        let prod = alg.mul_block(w, v, u, &unit, &self.entries[j][i]);
                        for (t, y) in prod.into_iter().enumerate() {
                            if y != 0 {
                                m.set(out_off[k][i] + t, in_off[k][j] + p, y);
                            }
                        }
                    }
                }
            }
        }
        m
    }

    /// The module morphism `⊕P(src) -> ⊕P(dst)` between [`Representation::projective_sum`]s.
    pub fn to_morphism(&self, alg: &BoundQuiverAlgebra) -> ModuleMorphism {
        let f = alg.field();
        let n = alg.vertex_count();
        let maps = (0..n)
            .map(|w| {
                let rows: usize = self.dst.iter().map(|&v| alg.block(v, w).len()).sum();
                let cols: usize = self.src.iter().map(|&u| alg.block(u, w).len()).sum();
                let mut m = Matrix::zeros(f, rows, cols);
                let mut c0 = 0;
                for (i, &u) in self.src.iter().enumerate() {
                    let blen = alg.block(u, w).len();
                    for p in 0..blen {
                        let mut unit = vec![0; blen];
                        unit[p] = 1;
                        let mut r0 = 0;
                        for (j, &v) in self.dst.iter().enumerate() {
                            let prod = alg.mul_block(v, u, w, &self.entries[j][i], &unit);
                            for (t, y) in prod.into_iter().enumerate() {
                                m.set(r0 + t, c0 + p, y);
                            }
                            r0 += alg.block(v, w).len();
                        }
                    }
                    c0 += blen;
                }
                m
            })
            .collect();
        ModuleMorphism { maps }
    }

    /// Reads off generator images of a module morphism between projective sums.
    pub fn from_morphism(alg: &BoundQuiverAlgebra, src: &[usize], dst: &[usize], phi: &ModuleMorphism) -> Self {
        let mut out = Self::zero(alg, src, dst);
        for (i, &u) in src.iter().enumerate() {
            let col_off: usize = src[..i].iter().map(|&x| alg.block(x, u).len()).sum();
            let col = col_off + alg.block_pos(alg.idempotent_basis(u));
            let image = phi.maps[u].column(col);
            let mut r0 = 0;
            for (j, &v) in dst.iter().enumerate() {
                let len = alg.block(v, u).len();
                out.entries[j][i].copy_from_slice(&image[r0..r0 + len]);
                r0 += len;
            }
        }
        out
    }

    /// Nakayama functor: the induced morphism `⊕I(src) -> ⊕I(dst)` between
    /// [`Representation::injective_sum`]s.
    pub fn nakayama(&self, alg: &BoundQuiverAlgebra) -> ModuleMorphism {
        let f = alg.field();
        let n = alg.vertex_count();
        let maps = (0..n)
            .map(|w| {
                let rows: usize = self.dst.iter().map(|&v| alg.block(w, v).len()).sum();
                let cols: usize = self.src.iter().map(|&u| alg.block(w, u).len()).sum();
                let mut m = Matrix::zeros(f, rows, cols);
                let mut r0 = 0;
                for (j, &v) in self.dst.iter().enumerate() {
                    let ylen = alg.block(w, v).len();
                    for y in 0..ylen {
                        let mut unit = vec![0; ylen];
                        unit[y] = 1;
                        let mut c0 = 0;
                        for (i, &u) in self.src.iter().enumerate() {
                            // entry (y, b) is the coefficient of b in y · x
                            let prod = alg.mul_block(w, v, u, &unit, &self.entries[j][i]);
                            for (t, c) in prod.into_iter().enumerate() {
                                m.set(r0 + y, c0 + t, c);
                            }
                            c0 += alg.block(w, u).len();
                        }
                    }
                    r0 += ylen;
                }
                m
            })
            .collect();
        ModuleMorphism { maps }
    }
}
