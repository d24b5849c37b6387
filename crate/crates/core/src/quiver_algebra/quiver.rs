use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// Finite quiver with labelled vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_lookup: HashMap<String, usize>,
    arrow_lookup: HashMap<String, usize>,
}

impl Quiver {
    /// Arrows are given as `(label, source label, target label)`.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let mut vertex_lookup = HashMap::new();
        let mut vs = Vec::new();
        for v in vertices {
            let v = v.as_ref().to_string();
            if vertex_lookup.insert(v.clone(), vs.len()).is_some() {
                return Err(Error::IllFormedQuiver(format!("duplicate vertex `{v}`")));
            }
            vs.push(v);
        }
        let mut arrow_lookup = HashMap::new();
        let mut arr = Vec::new();
        for (label, s, t) in arrows {
            let label = label.as_ref().to_string();
            let find = |x: &S| {
                vertex_lookup
                    .get(x.as_ref())
                    .copied()
                    .ok_or_else(|| Error::UnknownVertex(x.as_ref().to_string()))
            };
            let (source, target) = (find(s)?, find(t)?);
            if arrow_lookup.insert(label.clone(), arr.len()).is_some() {
                return Err(Error::IllFormedQuiver(format!("duplicate arrow `{label}`")));
            }
            arr.push(Arrow { label, source, target });
        }
        Ok(Quiver { vertices: vs, arrows: arr, vertex_lookup, arrow_lookup })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertex_lookup.get(label).copied()
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrow_lookup.get(label).copied()
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertex_index(label).ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Same labels with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let mut q = self.clone();
        for a in &mut q.arrows {
            std::mem::swap(&mut a.source, &mut a.target);
        }
        q
    }

    /// The full subquiver on the vertices outside `removed`.
    pub fn without_vertices(&self, removed: &[usize]) -> Quiver {
        let keep: Vec<&String> = (0..self.num_vertices())
            .filter(|v| !removed.contains(v))
            .map(|v| &self.vertices[v])
            .collect();
        let arrows: Vec<(&str, &str, &str)> = self
            .arrows
            .iter()
            .filter(|a| !removed.contains(&a.source) && !removed.contains(&a.target))
            .map(|a| {
                (a.label.as_str(), self.vertices[a.source].as_str(), self.vertices[a.target].as_str())
            })
            .collect();
        let keep: Vec<&str> = keep.iter().map(|s| s.as_str()).collect();
        Quiver::new(&keep, &arrows).expect("subquiver of a valid quiver")
    }

    /// Checks composability (left to right) and returns `(source, target)`.
    pub fn path_endpoints(&self, arrows: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*arrows.first()?)?;
        let mut at = first.target;
        for &a in &arrows[1..] {
            let a = self.arrows.get(a)?;
            if a.source != at {
                return None;
            }
            at = a.target;
        }
        Some((first.source, at))
    }

    pub fn path_string(&self, arrows: &[usize]) -> String {
        arrows.iter().map(|&a| self.arrows[a].label.as_str()).collect::<Vec<_>>().join("*")
    }
}

/// A path of the quiver; the empty arrow list is the trivial path `e_source`.
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

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// The path read backwards, a path of the opposite quiver.
    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: self.target, target: self.source, arrows }
    }

    /// Label such as `e1` or `b2*a1`.
    pub fn label(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertex_label(self.source))
        } else {
            q.path_string(&self.arrows)
        }
    }
}

/// Linear combination of paths with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationExpr {
    pub terms: Vec<(i64, Vec<usize>)>,
}

impl RelationExpr {
    pub fn new(terms: Vec<(i64, Vec<usize>)>) -> Self {
        RelationExpr { terms }
    }

    /// Builds a relation from labelled terms such as `(1, "a1*b2")`.
    pub fn parse_terms(q: &Quiver, terms: &[(i64, &str)]) -> Result<Self> {
        let mut out = Vec::new();
        for &(c, p) in terms {
            let arrows = p
                .split('*')
                .map(|l| q.arrow_index(l.trim()).ok_or_else(|| Error::UnknownArrow(l.to_string())))
                .collect::<Result<Vec<_>>>()?;
            out.push((c, arrows));
        }
        Ok(RelationExpr { terms: out })
    }

    /// Checks composability, uniformity and length >= 2; returns `(source, target)`.
    pub fn validate(&self, q: &Quiver) -> Result<(usize, usize)> {
        let mut ends = None;
        if self.terms.is_empty() {
            return Err(Error::IllFormedRelation("empty relation".into()));
        }
        for (c, p) in &self.terms {
            if *c == 0 {
                return Err(Error::IllFormedRelation(format!("zero coefficient in `{}`", self.display(q))));
            }
            if p.len() < 2 {
                return Err(Error::IllFormedRelation(format!(
                    "term `{}` has length below 2",
                    q.path_string(p)
                )));
            }
            let e = q.path_endpoints(p).ok_or_else(|| {
                Error::IllFormedRelation(format!("`{}` is not composable", q.path_string(p)))
            })?;
            match ends {
                None => ends = Some(e),
                Some(prev) if prev != e => {
                    return Err(Error::IllFormedRelation(format!(
                        "`{}` is not uniform",
                        self.display(q)
                    )))
                }
                _ => {}
            }
        }
        Ok(ends.unwrap())
    }

    pub fn reversed(&self) -> RelationExpr {
        RelationExpr {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (*c, p.iter().rev().copied().collect()))
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> RelationDisplay<'a> {
        RelationDisplay { rel: self, quiver: q }
    }
}

pub struct RelationDisplay<'a> {
    rel: &'a RelationExpr,
    quiver: &'a Quiver,
}

impl fmt::Display for RelationDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (c, p)) in self.rel.terms.iter().enumerate() {
            let path = self.quiver.path_string(p);
            if k == 0 {
                match *c {
                    1 => write!(f, "{path}")?,
                    c => write!(f, "{c}*{path}")?,
                }
            } else {
                let sign = if *c < 0 { '-' } else { '+' };
                match c.unsigned_abs() {
                    1 => write!(f, " {sign} {path}")?,
                    m => write!(f, " {sign} {m}*{path}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_unknowns() {
        assert!(Quiver::new(&["1", "1"], &[]).is_err());
        assert!(Quiver::new(&["1"], &[("a", "1", "2")]).is_err());
        assert!(Quiver::new(&["1", "2"], &[("a", "1", "2"), ("a", "2", "1")]).is_err());
    }

    #[test]
    fn relation_checks() {
        let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "1", "3")])
            .unwrap();
        let r = RelationExpr::parse_terms(&q, &[(1, "a*b")]).unwrap();
        assert_eq!(r.validate(&q).unwrap(), (0, 2));
        let short = RelationExpr::parse_terms(&q, &[(1, "a*b"), (-1, "c")]).unwrap();
        assert!(short.validate(&q).is_err());
        let bad = RelationExpr::parse_terms(&q, &[(1, "b*a")]).unwrap();
        assert!(bad.validate(&q).is_err());
    }

    #[test]
    fn relation_printing() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let r = RelationExpr::parse_terms(&q, &[(1, "a*b"), (-1, "a*b"), (3, "a*b")]).unwrap();
        assert_eq!(r.display(&q).to_string(), "a*b - a*b + 3*a*b");
        let r = RelationExpr::parse_terms(&q, &[(-2, "b*a")]).unwrap();
        assert_eq!(r.display(&q).to_string(), "-2*b*a");
    }
}
