//! Quivers with relations.
//!
//! Paths are stored in application order: `path.arrows[0]` acts first. Under
//! the global convention that composition `q ∘ p` means "first `p`, then
//! `q`", the function-notation word `βα` is therefore the stored list
//! `[α, β]`.

use super::AlgebraError;
use crate::linalg::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub name: String,
}

/// One summand `coeff * path` of a relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTerm {
    pub coeff: Rat,
    /// Arrow ids in application order.
    pub arrows: Vec<usize>,
}

/// A rational linear combination of parallel paths of a common length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<RelationTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl QuiverPresentation {
    pub fn new(
        vertices: usize,
        arrows: Vec<Arrow>,
        relations: Vec<Relation>,
    ) -> Result<Self, AlgebraError> {
        for (ai, a) in arrows.iter().enumerate() {
            if a.source >= vertices || a.target >= vertices {
                return Err(AlgebraError::InvalidRelation(format!(
                    "arrow {ai} endpoints exceed vertex count {vertices}"
                )));
            }
        }
        let pres = QuiverPresentation { vertices, arrows, relations };
        for (ri, rel) in pres.relations.iter().enumerate() {
            pres.validate_relation(ri, rel)?;
        }
        Ok(pres)
    }

    fn validate_relation(&self, ri: usize, rel: &Relation) -> Result<(), AlgebraError> {
        let Some(first) = rel.terms.first() else {
            return Err(AlgebraError::InvalidRelation(format!("relation {ri} has no terms")));
        };
        let len = first.arrows.len();
        if len < 2 {
            return Err(AlgebraError::InvalidRelation(format!(
                "relation {ri} has path length {len}; relations must have length >= 2"
            )));
        }
        let endpoints = self.path_endpoints(&first.arrows)?;
        for term in &rel.terms {
            if term.arrows.len() != len {
                return Err(AlgebraError::InvalidRelation(format!(
                    "relation {ri} mixes path lengths"
                )));
            }
            if self.path_endpoints(&term.arrows)? != endpoints {
                return Err(AlgebraError::InvalidRelation(format!(
                    "relation {ri} mixes non-parallel paths"
                )));
            }
        }
        Ok(())
    }

    /// `(source, target)` of a composable arrow word, in application order.
    pub fn path_endpoints(&self, arrows: &[usize]) -> Result<(usize, usize), AlgebraError> {
        let mut iter = arrows.iter();
        let Some(&first) = iter.next() else {
            return Err(AlgebraError::InvalidRelation("empty path has no endpoints".into()));
        };
        let source = self.arrows[first].source;
        let mut at = self.arrows[first].target;
        for &a in iter {
            if self.arrows[a].source != at {
                return Err(AlgebraError::InvalidRelation(format!(
                    "arrows {arrows:?} are not composable"
                )));
            }
            at = self.arrows[a].target;
        }
        Ok((source, at))
    }

    /// Ids of arrows starting at `v`.
    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == v)
            .map(|(i, _)| i)
    }
}
