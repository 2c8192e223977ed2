//! Quivers and paths.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<usize> {
        if label.is_empty() || self.vertices.iter().any(|v| v == label) {
            return Err(Error::Invalid(format!("duplicate or empty vertex label '{label}'")));
        }
        self.vertices.push(label.to_string());
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<usize> {
        if name.is_empty() || self.arrows.iter().any(|a| a.name == name) {
            return Err(Error::Invalid(format!("duplicate or empty arrow name '{name}'")));
        }
        if name.parse::<f64>().is_ok() || name.contains('/') {
            return Err(Error::Invalid(format!("arrow name '{name}' looks like a number")));
        }
        let s = self.exact_vertex(source)?;
        let t = self.exact_vertex(target)?;
        self.arrows.push(Arrow { name: name.to_string(), source: s, target: t });
        Ok(self.arrows.len() - 1)
    }

    fn exact_vertex(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::Invalid(format!("unknown vertex '{label}'")))
    }

    /// Look up a vertex by label.
    ///
    /// Besides exact labels this accepts the positional aliases `sigmaI`,
    /// `σI` and `sI` for the vertex with index `I`, and letter words such as
    /// `st` (letters `s,t,u,v,w,x` standing for `s1..s6`) when they spell a
    /// label of the form `s1*s2*...`.
    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        if let Ok(i) = self.exact_vertex(label) {
            return Ok(i);
        }
        let positional = label
            .strip_prefix("sigma")
            .or_else(|| label.strip_prefix('σ'))
            .or_else(|| label.strip_prefix('s'));
        if let Some(i) = positional.and_then(|r| r.parse::<usize>().ok()) {
            if i < self.vertices.len() {
                return Ok(i);
            }
        }
        const LETTERS: &str = "stuvwx";
        if !label.is_empty() && label.chars().all(|c| LETTERS.contains(c)) {
            let word: Vec<String> = label
                .chars()
                .map(|c| format!("s{}", LETTERS.find(c).unwrap() + 1))
                .collect();
            if let Ok(i) = self.exact_vertex(&word.join("*")) {
                return Ok(i);
            }
        }
        Err(Error::Invalid(format!("unknown vertex '{label}'")))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::Invalid(format!("unknown arrow '{name}'")))
    }

    /// The unique arrow `source -> target`, if there is exactly one.
    pub fn arrow_between(&self, source: usize, target: usize) -> Option<usize> {
        let mut it = self.arrows.iter().enumerate().filter(|(_, a)| a.source == source && a.target == target);
        let first = it.next()?.0;
        if it.next().is_some() {
            None
        } else {
            Some(first)
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }
}

/// A path stored in traversal order (first arrow first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        Path { source: q.arrows[a].source, target: q.arrows[a].target, arrows: vec![a] }
    }

    /// Path from a traversal-order arrow list; `None` if not composable.
    pub fn from_arrows(q: &Quiver, arrows: &[usize]) -> Option<Self> {
        let first = *arrows.first()?;
        let mut cur = q.arrows[first].target;
        for &a in &arrows[1..] {
            if q.arrows[a].source != cur {
                return None;
            }
            cur = q.arrows[a].target;
        }
        Some(Path { source: q.arrows[first].source, target: cur, arrows: arrows.to_vec() })
    }

    pub fn degree(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if other.target != self.source {
            return None;
        }
        let mut arrows = other.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path { source: other.source, target: self.target, arrows })
    }

    /// Right-to-left rendering `a3*a2*a1`; trivial paths render as `1_v`.
    pub fn render(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("1_{}", q.vertices[self.source]);
        }
        self.arrows.iter().rev().map(|&a| q.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }

    /// Basis order: degree, source, target, then arrows written right to left.
    pub fn cmp_order(&self, other: &Path) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.source.cmp(&other.source))
            .then(self.target.cmp(&other.target))
            .then_with(|| self.arrows.iter().rev().cmp(other.arrows.iter().rev()))
    }
}

pub struct PathDisplay<'a>(pub &'a Path, pub &'a Quiver);

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.render(self.1))
    }
}
