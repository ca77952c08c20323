//! Univariate polynomials over F_p, only as far as eigenvalue search needs them.

use super::{Fp, Matrix, PrimeField};

/// Coefficients from the constant term up; no trailing zeros.
pub type Poly = Vec<Fp>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn poly_rem(f: PrimeField, a: &[Fp], m: &[Fp]) -> Poly {
    let mut r = trim(a.to_vec());
    let lead_inv = f.inv(*m.last().unwrap());
    while r.len() >= m.len() {
        let c = f.mul(*r.last().unwrap(), lead_inv);
        let shift = r.len() - m.len();
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, mi));
        }
        r = trim(r);
    }
    r
}

fn poly_mul_mod(f: PrimeField, a: &[Fp], b: &[Fp], m: &[Fp]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.mul_add(out[i + j], x, y);
        }
    }
    poly_rem(f, &out, m)
}

fn poly_pow_mod(f: PrimeField, base: &[Fp], mut e: u64, m: &[Fp]) -> Poly {
    let mut result = poly_rem(f, &[1], m);
    let mut b = poly_rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mul_mod(f, &result, &b, m);
        }
        b = poly_mul_mod(f, &b, &b, m);
        e >>= 1;
    }
    result
}

fn poly_gcd(f: PrimeField, a: &[Fp], b: &[Fp]) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(f, &a, &b);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = f.inv(lead);
        a.iter_mut().for_each(|c| *c = f.mul(*c, inv));
    }
    a
}

fn poly_sub(f: PrimeField, a: &[Fp], b: &[Fp]) -> Poly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect())
}

fn poly_div_exact(f: PrimeField, a: &[Fp], m: &[Fp]) -> Poly {
    let mut r = trim(a.to_vec());
    let mut q = vec![0; r.len().saturating_sub(m.len()) + 1];
    let lead_inv = f.inv(*m.last().unwrap());
    while r.len() >= m.len() {
        let c = f.mul(*r.last().unwrap(), lead_inv);
        let shift = r.len() - m.len();
        q[shift] = c;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, mi));
        }
        r = trim(r);
    }
    trim(q)
}

pub fn mul(f: PrimeField, a: &[Fp], b: &[Fp]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.mul_add(out[i + j], x, y);
        }
    }
    trim(out)
}

/// `p(m)` by Horner's rule.
pub fn eval_matrix(p: &[Fp], m: &Matrix) -> Matrix {
    let f = m.field();
    let n = m.rows();
    let mut acc = Matrix::zeros(f, n, n);
    for &c in p.iter().rev() {
        acc = acc.mul(m).add(&Matrix::identity(f, n).scale(c));
    }
    acc
}

/// Distinct-degree factorization: pairs `(d, g_d)` with `g_d` the product of the distinct
/// monic irreducible factors of degree `d` of `p`.
pub fn distinct_degree_parts(f: PrimeField, p: &[Fp]) -> Vec<(usize, Poly)> {
    let mut rest = trim(p.to_vec());
    let mut out = Vec::new();
    if rest.len() <= 1 {
        return out;
    }
    let mut xq: Poly = vec![0, 1];
    let mut d = 1;
    while rest.len() > 1 {
        if 2 * d > rest.len() - 1 {
            let g = poly_gcd(f, &rest, &rest);
            out.push((rest.len() - 1, g));
            break;
        }
        xq = poly_pow_mod(f, &xq, f.p() as u64, &rest);
        let g = poly_gcd(f, &rest, &poly_sub(f, &xq, &[0, 1]));
        if g.len() > 1 {
            while poly_rem(f, &rest, &g).is_empty() {
                rest = poly_div_exact(f, &rest, &g);
                if rest.len() <= 1 {
                    break;
                }
            }
            out.push((d, g));
            if rest.len() > 1 {
                xq = poly_rem(f, &xq, &rest);
            }
        }
        d += 1;
    }
    out
}

pub fn eval(f: PrimeField, p: &[Fp], x: Fp) -> Fp {
    p.iter().rev().fold(0, |acc, &c| f.mul_add(c, acc, x))
}

/// Characteristic polynomial `det(x I - m)` via reduction to Hessenberg form.
pub fn charpoly(m: &Matrix) -> Poly {
    let f = m.field();
    let n = m.rows();
    assert!(m.is_square());
    let mut h: Vec<Vec<Fp>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    for col in 1..n.saturating_sub(1) {
        let Some(piv) = (col..n).find(|&i| h[i][col - 1] != 0) else { continue };
        if piv != col {
            h.swap(piv, col);
            for row in h.iter_mut() {
                row.swap(piv, col);
            }
        }
        let inv = f.inv(h[col][col - 1]);
        for i in col + 1..n {
            let u = f.mul(h[i][col - 1], inv);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let v = f.mul(u, h[col][j]);
                h[i][j] = f.sub(h[i][j], v);
            }
            for row in h.iter_mut() {
                let v = f.mul(u, row[i]);
                row[col] = f.add(row[col], v);
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
    let mut ps: Vec<Poly> = vec![vec![1]];
    for k in 0..n {
        let prev = &ps[k];
        let mut next = vec![0; prev.len() + 1];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], c);
            next[i] = f.sub(next[i], f.mul(h[k][k], c));
        }
        let mut prod: Fp = 1;
        for i in (0..k).rev() {
            prod = f.mul(prod, h[i + 1][i]);
            let coeff = f.mul(h[i][k], prod);
            if coeff != 0 {
                for (j, &c) in ps[i].iter().enumerate() {
                    next[j] = f.sub(next[j], f.mul(coeff, c));
                }
            }
        }
        ps.push(next);
    }
    ps.pop().unwrap()
}

/// Distinct roots in F_p, ascending.
pub fn roots(f: PrimeField, p: &[Fp]) -> Vec<Fp> {
    let p = trim(p.to_vec());
    if p.len() <= 1 {
        return Vec::new();
    }
    if f.p() <= 4096 {
        return (0..f.p()).filter(|&x| eval(f, &p, x) == 0).collect();
    }
    // product of the distinct linear factors: gcd(p, x^q - x)
    let xq = poly_pow_mod(f, &[0, 1], f.p() as u64, &p);
    let g = poly_gcd(f, &p, &poly_sub(f, &xq, &[0, 1]));
    let mut out = Vec::new();
    split_linear(f, g, 1, &mut out);
    out.sort_unstable();
    out
}

/// Splits a product of distinct monic linear factors (odd characteristic).
fn split_linear(f: PrimeField, g: Poly, mut shift: Fp, out: &mut Vec<Fp>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push(f.neg(g[0])),
        _ => loop {
            let h = poly_pow_mod(f, &[shift, 1], (f.p() as u64 - 1) / 2, &g);
            let d = poly_gcd(f, &g, &poly_sub(f, &h, &[1]));
            shift = f.add(shift, 1);
            if d.len() > 1 && d.len() < g.len() {
                let rest = poly_div_exact(f, &g, &d);
                split_linear(f, d, shift, out);
                split_linear(f, rest, shift, out);
                return;
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_companion_like_matrix() {
        let f = PrimeField::default();
        // eigenvalues 2, 3, 3
        let m = Matrix::from_rows(f, &[vec![2, 1, 0], vec![0, 3, 1], vec![0, 0, 3]]);
        let cp = charpoly(&m);
        assert_eq!(roots(f, &cp), vec![2, 3]);
        assert_eq!(eval(f, &cp, 5), 3 * 2 * 2);
        let perm = Matrix::from_rows(f, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(roots(f, &charpoly(&perm)), vec![1, f.p() - 1]);
    }

    #[test]
    fn charpoly_needs_row_swaps() {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::from_rows(f, &[vec![1, 0, 5], vec![0, 0, 1], vec![3, 1, 2]]);
        let cp = charpoly(&m);
        for x in 0..7 {
            let shifted = Matrix::identity(f, 3).scale(x).sub(&m);
            let det_zero = !shifted.is_invertible();
            assert_eq!(eval(f, &cp, x) == 0, det_zero);
        }
    }

    #[test]
    fn distinct_degree_split() {
        let f = PrimeField::new(7).unwrap();
        // (x^2 + 1)^2 (x - 2): x^2 + 1 is irreducible mod 7
        let q = mul(f, &[1, 0, 1], &[1, 0, 1]);
        let p = mul(f, &q, &[5, 1]);
        let parts = distinct_degree_parts(f, &p);
        assert_eq!(parts, vec![(1, vec![5, 1]), (2, vec![1, 0, 1])]);
        let m = Matrix::from_rows(f, &[vec![0, 6], vec![1, 0]]);
        assert!(eval_matrix(&[1, 0, 1], &m).is_zero());
    }

    #[test]
    fn irreducible_quadratic_has_no_roots() {
        let f = PrimeField::default();
        // x^2 + 1 splits iff p = 1 mod 4; 32003 = 3 mod 4
        assert!(roots(f, &[1, 0, 1]).is_empty());
        assert_eq!(roots(f, &[f.neg(6), 1, 1]), vec![2, f.p() - 3]);
    }
}
