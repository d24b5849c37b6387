//! Built-in algebra families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::spec_text::{AlgebraSpec, FieldSpec, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyName {
    /// Path algebra of the linear quiver `n -> ... -> 1`.
    NakayamaA,
    /// Linear quiver on `n + 1` vertices modulo the square of the arrow ideal.
    RadsquareA,
    /// Auslander algebra of `K[x]/(x^n)`.
    AuslanderUniserial,
    /// Preprojective algebra of type `A_n`.
    PreprojectiveA,
    /// Auslander algebra of the path algebra of linear `A_n`.
    AuslanderNakayama,
}

impl FamilyName {
    pub const ALL: [FamilyName; 5] = [
        FamilyName::NakayamaA,
        FamilyName::RadsquareA,
        FamilyName::AuslanderUniserial,
        FamilyName::PreprojectiveA,
        FamilyName::AuslanderNakayama,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::NakayamaA => "nakayama_a",
            FamilyName::RadsquareA => "radsquare_a",
            FamilyName::AuslanderUniserial => "auslander_uniserial",
            FamilyName::PreprojectiveA => "preprojective_a",
            FamilyName::AuslanderNakayama => "auslander_nakayama",
        }
    }

    /// Largest supported parameter.
    pub fn max_n(self) -> usize {
        match self {
            FamilyName::AuslanderNakayama => 6,
            _ => 64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyId {
    pub name: FamilyName,
    pub n: usize,
}

impl FamilyId {
    pub fn new(name: FamilyName, n: usize) -> Result<Self> {
        if n == 0 || n > name.max_n() {
            return Err(Error::Invalid(format!(
                "{} needs 1 <= n <= {}, got {n}",
                name.as_str(),
                name.max_n()
            )));
        }
        Ok(FamilyId { name, n })
    }

    /// Dimension of the algebra, from a closed formula.
    pub fn expected_dim(&self) -> usize {
        let n = self.n;
        match self.name {
            FamilyName::NakayamaA => n * (n + 1) / 2,
            FamilyName::RadsquareA => 2 * n + 1,
            FamilyName::AuslanderUniserial => n * (n + 1) * (2 * n + 1) / 6,
            FamilyName::PreprojectiveA => n * (n + 1) * (n + 2) / 6,
            FamilyName::AuslanderNakayama => n * (n + 1) * (n + 2) * (n + 3) / 24,
        }
    }

    pub fn spec(&self) -> AlgebraSpec {
        family_spec(*self)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.name.as_str(), self.n)
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    /// `name:n`, for example `nakayama_a:3`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, n) = s
            .split_once(':')
            .ok_or_else(|| Error::Invalid(format!("expected `name:n`, got `{s}`")))?;
        let name = FamilyName::ALL
            .into_iter()
            .find(|f| f.as_str() == name)
            .ok_or_else(|| Error::Invalid(format!("unknown family `{name}`")))?;
        let n = n.parse().map_err(|_| Error::Invalid(format!("bad parameter `{n}`")))?;
        FamilyId::new(name, n)
    }
}

fn term(c: i64, labels: &[String]) -> Term {
    (c, labels.to_vec())
}

fn arrow(label: String, s: impl ToString, t: impl ToString) -> (String, String, String) {
    (label, s.to_string(), t.to_string())
}

/// The doubled linear quiver with `a_i: i -> i+1` and `b_i: i -> i-1`.
fn doubled_linear(n: usize) -> (Vec<String>, Vec<(String, String, String)>) {
    let vertices = (1..=n).map(|i| i.to_string()).collect();
    let mut arrows: Vec<_> = (1..n).map(|i| arrow(format!("a{i}"), i, i + 1)).collect();
    arrows.extend((2..=n).map(|i| arrow(format!("b{i}"), i, i - 1)));
    (vertices, arrows)
}

/// `a_i b_{i+1} = b_i a_{i-1}` for `2 <= i <= n-1`.
fn mesh_relations(n: usize) -> Vec<Vec<Term>> {
    (2..n)
        .map(|i| {
            vec![
                term(1, &[format!("a{i}"), format!("b{}", i + 1)]),
                term(-1, &[format!("b{i}"), format!("a{}", i - 1)]),
            ]
        })
        .collect()
}

pub fn family_spec(f: FamilyId) -> AlgebraSpec {
    let n = f.n;
    let (vertices, arrows, relations) = match f.name {
        FamilyName::NakayamaA => {
            let vertices = (1..=n).map(|i| i.to_string()).collect();
            let arrows = (1..n).map(|i| arrow(format!("a{i}"), i + 1, i)).collect();
            (vertices, arrows, Vec::new())
        }
        FamilyName::RadsquareA => {
            let vertices = (1..=n + 1).map(|i| i.to_string()).collect();
            let arrows = (1..=n).map(|i| arrow(format!("a{i}"), i, i + 1)).collect();
            let relations = (1..n).map(|i| vec![term(1, &[format!("a{i}"), format!("a{}", i + 1)])]).collect();
            (vertices, arrows, relations)
        }
        FamilyName::AuslanderUniserial => {
            let (vertices, arrows) = doubled_linear(n);
            let mut relations = Vec::new();
            if n >= 2 {
                relations.push(vec![term(1, &["a1".into(), "b2".into()])]);
            }
            relations.extend(mesh_relations(n));
            (vertices, arrows, relations)
        }
        FamilyName::PreprojectiveA => {
            let (vertices, arrows) = doubled_linear(n);
            let mut relations = Vec::new();
            if n >= 2 {
                relations.push(vec![term(1, &["a1".into(), "b2".into()])]);
                relations.push(vec![term(1, &[format!("b{n}"), format!("a{}", n - 1)])]);
            }
            relations.extend(mesh_relations(n));
            (vertices, arrows, relations)
        }
        FamilyName::AuslanderNakayama => {
            let v = |i: usize, j: usize| format!("v_{i}_{j}");
            let a = |i: usize, j: usize| format!("a_{i}_{j}");
            let b = |i: usize, j: usize| format!("b_{i}_{j}");
            let mut vertices = Vec::new();
            let mut arrows = Vec::new();
            for i in 1..=n {
                for j in i..=n {
                    vertices.push(v(i, j));
                    if i >= 2 {
                        arrows.push(arrow(a(i, j), v(i, j), v(i - 1, j)));
                    }
                    if j > i {
                        arrows.push(arrow(b(i, j), v(i, j), v(i, j - 1)));
                    }
                }
            }
            let mut relations = Vec::new();
            for i in 1..n {
                for j in i..n {
                    if i < j {
                        relations.push(vec![
                            term(1, &[a(i + 1, j + 1), b(i, j + 1)]),
                            term(-1, &[b(i + 1, j + 1), a(i + 1, j)]),
                        ]);
                    } else {
                        relations.push(vec![term(1, &[a(i + 1, i + 1), b(i, i + 1)])]);
                    }
                }
            }
            (vertices, arrows, relations)
        }
    };
    AlgebraSpec { field: FieldSpec::Rationals, vertices, arrows, relations }
}
