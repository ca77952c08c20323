//! Quivers, paths and admissible relations.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{Fp, PrimeField};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    /// 0-based vertex index
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Vertices are `0..vertex_count` internally and `1..=vertex_count` in files.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize) -> Self {
        Quiver { vertex_count, arrows: Vec::new() }
    }

    pub fn add_arrow(&mut self, name: &str, source: usize, target: usize) -> Result<usize> {
        if source >= self.vertex_count || target >= self.vertex_count {
            return Err(Error::InvalidInput(format!("arrow {name}: vertex out of range")));
        }
        if self.arrows.iter().any(|a| a.name == name) {
            return Err(Error::InvalidInput(format!("duplicate arrow name {name}")));
        }
        self.arrows.push(Arrow { name: name.to_string(), source, target });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Number of arrows from `i` to `j`.
    pub fn arrow_count(&self, i: usize, j: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == i && a.target == j).count()
    }

    /// Same vertices, every arrow reversed, names kept.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertex_count: self.vertex_count,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0usize; self.vertex_count];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..self.vertex_count).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen == self.vertex_count
    }

    /// Checks that the arrow sequence composes and returns its (source, target).
    pub fn path_endpoints(&self, arrows: &[usize]) -> Result<(usize, usize)> {
        let first = arrows.first().ok_or_else(|| Error::InvalidInput("empty path".into()))?;
        let mut at = self.arrows[*first].target;
        for &a in &arrows[1..] {
            let arr = &self.arrows[a];
            if arr.source != at {
                return Err(Error::InvalidInput(format!(
                    "path does not compose at arrow {}",
                    arr.name
                )));
            }
            at = arr.target;
        }
        Ok((self.arrows[*first].source, at))
    }
}

/// A path in traversal order. Trivial paths have no arrows and `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `other`, if they compose.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    pub fn reversed(&self) -> Path {
        Path {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver: q }
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_trivial() {
            return write!(f, "e{}", self.path.source + 1);
        }
        let names: Vec<&str> =
            self.path.arrows.iter().map(|&a| self.quiver.arrow(a).name.as_str()).collect();
        write!(f, "{}", names.join("."))
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Fp, Vec<usize>)>,
}

impl Relation {
    pub fn monomial(arrows: Vec<usize>) -> Self {
        Relation { terms: vec![(1, arrows)] }
    }

    /// Combines repeated paths and drops zero coefficients.
    pub fn normalized(&self, field: PrimeField) -> Relation {
        let mut acc: HashMap<Vec<usize>, Fp> = HashMap::new();
        let mut order = Vec::new();
        for (c, p) in &self.terms {
            let e = acc.entry(p.clone()).or_insert_with(|| {
                order.push(p.clone());
                0
            });
            *e = field.add(*e, *c);
        }
        Relation {
            terms: order
                .into_iter()
                .filter_map(|p| {
                    let c = acc[&p];
                    (c != 0).then_some((c, p))
                })
                .collect(),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Checks admissibility shape: nonempty, parallel, every term of length >= 2.
    pub fn validate(&self, q: &Quiver) -> Result<(usize, usize)> {
        let mut ends = None;
        if self.terms.is_empty() {
            return Err(Error::InvalidRelation("relation has no terms".into()));
        }
        for (_, p) in &self.terms {
            if p.len() < 2 {
                return Err(Error::InvalidRelation("relation term of length < 2".into()));
            }
            if p.iter().any(|&a| a >= q.arrows().len()) {
                return Err(Error::InvalidRelation("unknown arrow".into()));
            }
            let e = q.path_endpoints(p).map_err(|e| Error::InvalidRelation(e.to_string()))?;
            match ends {
                None => ends = Some(e),
                Some(prev) if prev != e => {
                    return Err(Error::InvalidRelation("terms are not parallel".into()))
                }
                _ => {}
            }
        }
        Ok(ends.unwrap())
    }

    pub fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (*c, p.iter().rev().copied().collect()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> Quiver {
        let mut q = Quiver::new(3);
        q.add_arrow("a", 1, 0).unwrap();
        q.add_arrow("b", 2, 1).unwrap();
        q
    }

    #[test]
    fn paths_compose_in_traversal_order() {
        let q = a3();
        assert_eq!(q.path_endpoints(&[1, 0]).unwrap(), (2, 0));
        assert!(q.path_endpoints(&[0, 1]).is_err());
        let p = Path { source: 2, target: 1, arrows: vec![1] };
        let r = Path { source: 1, target: 0, arrows: vec![0] };
        assert_eq!(p.concat(&r).unwrap().display(&q).to_string(), "b.a");
        assert!(r.concat(&p).is_none());
    }

    #[test]
    fn relation_validation() {
        let q = a3();
        assert!(Relation::monomial(vec![1, 0]).validate(&q).is_ok());
        assert!(Relation::monomial(vec![0]).validate(&q).is_err());
        assert!(Relation { terms: vec![] }.validate(&q).is_err());
    }

    #[test]
    fn duplicate_arrow_rejected() {
        let mut q = a3();
        assert!(q.add_arrow("a", 0, 1).is_err());
        assert!(q.add_arrow("c", 0, 5).is_err());
        assert!(q.is_acyclic());
        q.add_arrow("c", 0, 2).unwrap();
        assert!(!q.is_acyclic());
    }
}
