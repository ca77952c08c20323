//! Text formats for algebras, modules and derived objects. Vertices are numbered from 1 in
//! files and from 0 in memory. `#` starts a comment.
//!
//! ```text
//! vertices 3
//! arrow a 2 1
//! arrow b 3 2
//! relation 1 b.a
//! ```
//!
//! ```text
//! module
//! dim 1 1 0
//! map a 1x1 [ 1 ]
//! ```
//!
//! ```text
//! dobj
//! summand 0 P(1)
//! summand 1 interval(2,3)
//! summand 0 extra.mod
//! ```

use std::path::Path as FsPath;

use crate::algebra::{build_algebra, Algebra};
use crate::derived::{DerivedObject, Summand};
use crate::error::{Error, Result};
use crate::exactla::{Fp, Matrix, PrimeField};
use crate::module::{decompose, is_isomorphic_indecomposable, Representation};
use crate::quiver::{Quiver, Relation};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let toks: Vec<&str> = l.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| perr(line, format!("expected a number, found `{tok}`")))
}

fn vertex(line: usize, tok: &str, n: usize) -> Result<usize> {
    let v: usize = num(line, tok)?;
    if v == 0 || v > n {
        return Err(perr(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_algebra(text: &str, field: PrimeField, max_path_len: usize) -> Result<Algebra> {
    let mut quiver: Option<Quiver> = None;
    let mut rels: Vec<(usize, Vec<&str>)> = Vec::new();
    for (ln, toks) in lines(text) {
        match toks[0] {
            "vertices" => {
                if quiver.is_some() || toks.len() != 2 {
                    return Err(perr(ln, "`vertices N` must appear once, first"));
                }
                quiver = Some(Quiver::new(num(ln, toks[1])?));
            }
            "arrow" => {
                let q = quiver.as_mut().ok_or_else(|| perr(ln, "`arrow` before `vertices`"))?;
                if toks.len() != 4 {
                    return Err(perr(ln, "expected `arrow <name> <source> <target>`"));
                }
                let n = q.vertex_count();
                let (s, t) = (vertex(ln, toks[2], n)?, vertex(ln, toks[3], n)?);
                q.add_arrow(toks[1], s, t).map_err(|e| perr(ln, e.to_string()))?;
            }
            "relation" => rels.push((ln, toks[1..].to_vec())),
            other => return Err(perr(ln, format!("unknown keyword `{other}`"))),
        }
    }
    let q = quiver.ok_or_else(|| perr(0, "missing `vertices`"))?;
    let mut relations = Vec::new();
    for (ln, toks) in rels {
        relations.push(parse_relation(ln, &toks, &q, field)?);
    }
    build_algebra(field, q, relations, max_path_len)
}

fn parse_relation(ln: usize, toks: &[&str], q: &Quiver, field: PrimeField) -> Result<Relation> {
    let mut terms = Vec::new();
    let mut i = 0;
    let mut sign = 1i64;
    while i < toks.len() {
        match toks[i] {
            "+" => {
                sign = 1;
                i += 1;
                continue;
            }
            "-" => {
                sign = -1;
                i += 1;
                continue;
            }
            _ => {}
        }
        if i + 1 >= toks.len() {
            return Err(perr(ln, "expected `<coeff> <path>`"));
        }
        let c: i64 = num(ln, toks[i])?;
        let path = toks[i + 1]
            .split('.')
            .map(|a| q.arrow_index(a).ok_or_else(|| perr(ln, format!("unknown arrow `{a}`"))))
            .collect::<Result<Vec<usize>>>()?;
        terms.push((field.from_i64(sign * c), path));
        sign = 1;
        i += 2;
    }
    if terms.is_empty() {
        return Err(perr(ln, "empty relation"));
    }
    let r = Relation { terms }.normalized(field);
    r.validate(q).map_err(|e| perr(ln, e.to_string()))?;
    Ok(r)
}

pub fn write_algebra(alg: &Algebra) -> String {
    let q = alg.quiver();
    let f = alg.field();
    let mut out = format!("vertices {}\n", q.vertex_count());
    for a in q.arrows() {
        out += &format!("arrow {} {} {}\n", a.name, a.source + 1, a.target + 1);
    }
    for r in alg.relations() {
        let terms: Vec<String> = r
            .terms
            .iter()
            .map(|(c, p)| {
                let names: Vec<&str> = p.iter().map(|&a| q.arrow(a).name.as_str()).collect();
                format!("{} {}", f.to_signed(*c), names.join("."))
            })
            .collect();
        out += &format!("relation {}\n", terms.join(" + "));
    }
    out
}

pub fn parse_module(text: &str, alg: &Algebra) -> Result<Representation> {
    let f = alg.field();
    let q = alg.quiver();
    let mut dims: Option<Vec<usize>> = None;
    let mut maps: Vec<Option<Matrix>> = vec![None; q.arrows().len()];
    for (ln, toks) in lines(text) {
        match toks[0] {
            "module" => {}
            "dim" => {
                let d = toks[1..].iter().map(|t| num(ln, t)).collect::<Result<Vec<usize>>>()?;
                if d.len() != q.vertex_count() {
                    return Err(perr(ln, format!("expected {} dimensions", q.vertex_count())));
                }
                dims = Some(d);
            }
            "map" => {
                let dims = dims.as_ref().ok_or_else(|| perr(ln, "`map` before `dim`"))?;
                if toks.len() < 3 {
                    return Err(perr(ln, "expected `map <arrow> <rows>x<cols> [ ... ]`"));
                }
                let ai = q.arrow_index(toks[1]).ok_or_else(|| perr(ln, format!("unknown arrow `{}`", toks[1])))?;
                let (r, c) = toks[2].split_once('x').ok_or_else(|| perr(ln, "shape must be `<rows>x<cols>`"))?;
                let (r, c): (usize, usize) = (num(ln, r)?, num(ln, c)?);
                let a = q.arrow(ai);
                if r != dims[a.target] || c != dims[a.source] {
                    return Err(perr(ln, format!("map {} must be {}x{}", a.name, dims[a.target], dims[a.source])));
                }
                let body: Vec<&str> = toks[3..].iter().copied().filter(|t| *t != "[" && *t != "]").collect();
                let body: Vec<&str> =
                    body.iter().map(|t| t.trim_start_matches('[').trim_end_matches(']')).filter(|t| !t.is_empty()).collect();
                if body.len() != r * c {
                    return Err(perr(ln, format!("expected {} entries", r * c)));
                }
                let data = body.iter().map(|t| num::<i64>(ln, t).map(|v| f.from_i64(v))).collect::<Result<Vec<Fp>>>()?;
                maps[ai] = Some(Matrix::from_vec(f, r, c, data));
            }
            other => return Err(perr(ln, format!("unknown keyword `{other}`"))),
        }
    }
    let dims = dims.ok_or_else(|| perr(0, "missing `dim`"))?;
    let maps = q
        .arrows()
        .iter()
        .zip(maps)
        .map(|(a, m)| m.unwrap_or_else(|| Matrix::zeros(f, dims[a.target], dims[a.source])))
        .collect();
    Representation::new(alg.clone(), dims, maps)
}

pub fn write_module(m: &Representation) -> String {
    let f = m.field();
    let q = m.algebra().quiver();
    let dims: Vec<String> = m.dims().iter().map(usize::to_string).collect();
    let mut out = format!("module\ndim {}\n", dims.join(" "));
    for (ai, a) in q.arrows().iter().enumerate() {
        let x = m.map(ai);
        if x.is_zero() {
            continue;
        }
        let entries: Vec<String> = x.data().iter().map(|&v| f.to_signed(v).to_string()).collect();
        out += &format!("map {} {}x{} [ {} ]\n", a.name, x.rows(), x.cols(), entries.join(" "));
    }
    out
}

/// `P(i)`, `I(i)`, `S(i)` or `interval(i,j)`, 1-based.
pub fn parse_builtin(spec: &str, alg: &Algebra) -> Result<Option<Representation>> {
    let n = alg.vertex_count();
    let Some((head, rest)) = spec.split_once('(') else {
        return Ok(None);
    };
    let Some(args) = rest.strip_suffix(')') else {
        return Ok(None);
    };
    let args: Vec<usize> = args
        .split(',')
        .map(|a| a.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad module `{spec}`"))))
        .collect::<Result<_>>()?;
    let check = |v: usize| {
        if v == 0 || v > n {
            Err(Error::InvalidInput(format!("vertex {v} outside 1..={n} in `{spec}`")))
        } else {
            Ok(v - 1)
        }
    };
    let m = match (head, args.as_slice()) {
        ("P", [v]) => Representation::projective(alg, check(*v)?),
        ("I", [v]) => Representation::injective(alg, check(*v)?),
        ("S", [v]) => Representation::simple(alg, check(*v)?),
        ("interval", [i, j]) => Representation::interval(alg, check(*i)?, check(*j)?)?,
        _ => return Ok(None),
    };
    Ok(Some(m))
}

/// A builtin name or a module file (relative paths resolve against `base`).
pub fn load_module_ref(spec: &str, alg: &Algebra, base: &FsPath) -> Result<Representation> {
    if let Some(m) = parse_builtin(spec, alg)? {
        return Ok(m);
    }
    let text = std::fs::read_to_string(base.join(spec))?;
    parse_module(&text, alg)
}

pub fn parse_dobj(text: &str, alg: &Algebra, base: &FsPath) -> Result<DerivedObject> {
    let mut parts = Vec::new();
    for (ln, toks) in lines(text) {
        match toks[0] {
            "dobj" => {}
            "summand" => {
                if toks.len() != 3 {
                    return Err(perr(ln, "expected `summand <shift> <module>`"));
                }
                let s: i32 = num(ln, toks[1])?;
                let m = load_module_ref(toks[2], alg, base).map_err(|e| perr(ln, e.to_string()))?;
                parts.push((m, s));
            }
            other => return Err(perr(ln, format!("unknown keyword `{other}`"))),
        }
    }
    DerivedObject::new(alg, parts)
}

/// Builtin name of an indecomposable, if it is isomorphic to an interval module.
pub fn builtin_name(m: &Representation) -> Option<String> {
    let alg = m.algebra();
    let support = m.support();
    let (&lo, &hi) = (support.first()?, support.last()?);
    let iv = Representation::interval(alg, lo, hi).ok()?;
    is_isomorphic_indecomposable(m, &iv).then(|| {
        if lo == hi {
            format!("S({})", lo + 1)
        } else {
            format!("interval({},{})", lo + 1, hi + 1)
        }
    })
}

/// Writes summands by builtin name; fails for a summand that is not an interval module.
pub fn write_dobj(t: &DerivedObject) -> Result<String> {
    let mut out = String::from("dobj\n");
    for Summand { module, shift } in t.summands() {
        let name = builtin_name(module)
            .ok_or_else(|| Error::InvalidInput(format!("summand {} has no builtin name", module.dim_label())))?;
        out += &format!("summand {shift} {name}\n");
    }
    Ok(out)
}

/// Indecomposable summands of a module given by reference, for the CLI.
pub fn load_summands(specs: &[String], alg: &Algebra, base: &FsPath) -> Result<Vec<Representation>> {
    let mut out = Vec::new();
    for s in specs {
        out.extend(decompose(&load_module_ref(s, alg, base)?)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::generate_ank;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn algebra_round_trip() {
        let a = generate_ank(f(), 4, 3).unwrap();
        let text = write_algebra(&a);
        assert_eq!(text, "vertices 4\narrow a1 2 1\narrow a2 3 2\narrow a3 4 3\nrelation 1 a2.a1\n");
        let b = parse_algebra(&text, f(), 30).unwrap();
        assert!(a.same_presentation(&b));
        let c = parse_algebra("vertices 4 # square\narrow x 1 2\narrow y 1 3\narrow z 2 4\narrow w 3 4\nrelation 1 x.z - 1 y.w\n", f(), 30)
            .unwrap();
        assert_eq!(c.dim(), 4 + 4 + 1);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let e = parse_algebra("vertices 2\narrow a 1 3\n", f(), 30).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_algebra("vertices 2\narrow a 1 2\nrelation 1 a\n", f(), 30).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn module_round_trip() {
        let a = generate_ank(f(), 4, 3).unwrap();
        let m = Representation::injective(&a, 3);
        let text = write_module(&m);
        let back = parse_module(&text, &a).unwrap();
        assert_eq!(back.dims(), m.dims());
        assert!(is_isomorphic_indecomposable(&m, &back));
        let e = parse_module("module\ndim 1 1 0 0\nmap a1 2x1 [ 1 2 ]\n", &a).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn dobj_round_trip() {
        let a = generate_ank(f(), 3, 2).unwrap();
        let t = parse_dobj("dobj\nsummand 0 P(1)\nsummand 1 interval(2,3)\nsummand 0 I(1)\n", &a, FsPath::new(".")).unwrap();
        assert_eq!(t.len(), 3);
        let text = write_dobj(&t).unwrap();
        assert_eq!(text, "dobj\nsummand 0 S(1)\nsummand 1 interval(2,3)\nsummand 0 interval(1,3)\n");
    }
}
