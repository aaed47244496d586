//! The centre of the restricted rational Cherednik algebra at generic `c`,
//! assembled block by block as `A⁻ ⊗ A⁺` over the irreducibles of
//! `S_n` (ℓ = 1) or `S_n ≀ ℤ/ℓℤ` (ℓ > 1).

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::abacus::{multipartitions_of, MultiPartition};
use crate::error::{Error, Result};
use crate::hilbert;
use crate::partition::{partitions_of, Partition};
use crate::presentation::{negate_grading, presentation_for, GradedPresentation, Label};

pub const ASSUMPTION: &str = "generic c / smooth Calogero-Moser";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub label: Label,
    /// `λ*`, whose plus part the minus part copies; wreath blocks only.
    pub star_label: Option<MultiPartition>,
    pub plus: GradedPresentation,
    pub minus: GradedPresentation,
    pub plus_dimension: u64,
    pub minus_dimension: u64,
}

impl Block {
    pub fn dimension(&self) -> u64 {
        self.plus_dimension * self.minus_dimension
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "label": self.label.to_string(),
            "plus": self.plus.to_json(),
            "minus": self.minus.to_json(),
            "dimension": self.dimension(),
        });
        if let Some(s) = &self.star_label {
            v["star_label"] = json!(s.to_string());
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentrePresentation {
    pub n: usize,
    pub ell: usize,
    pub blocks: Vec<Block>,
}

impl CentrePresentation {
    pub fn total_dimension(&self) -> u64 {
        self.blocks.iter().map(Block::dimension).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": { "n": self.n, "ell": self.ell },
            "assumption": ASSUMPTION,
            "blocks": self.blocks.iter().map(Block::to_json).collect::<Vec<_>>(),
            "total_dimension": self.total_dimension(),
        })
    }

    /// One line per block, then the total.
    pub fn render(&self) -> String {
        let mut out = format!("Z(H_c) for n={}, ell={} ({ASSUMPTION})\n", self.n, self.ell);
        for b in &self.blocks {
            out.push_str(&format!(
                "[{}] dim {} = {} x {}\n  plus:  {}\n  minus: {}\n",
                b.label,
                b.dimension(),
                b.plus_dimension,
                b.minus_dimension,
                b.plus,
                b.minus
            ));
        }
        out.push_str(&format!("total dimension {}\n", self.total_dimension()));
        out
    }
}

/// The block `A⁻ ⊗ A⁺` for one irreducible.
pub fn block(label: &Label, ell: usize, simplified: bool) -> Result<Block> {
    if ell == 0 {
        return Err(Error::InvalidEll);
    }
    let (plus, star_label, mirror) = match label {
        Label::Partition(_) => {
            let plus = presentation_for(label, simplified)?;
            (plus.clone(), None, plus)
        }
        Label::Multi(q) => {
            if q.ell() != ell {
                return Err(Error::LengthMismatch {
                    expected: ell,
                    found: q.ell(),
                });
            }
            let star = q.star();
            let plus = presentation_for(label, simplified)?;
            let mirror = presentation_for(&Label::Multi(star.clone()), simplified)?;
            (plus, Some(star), mirror)
        }
    };
    let minus = negate_grading(&mirror).with_prefix('g');
    Ok(Block {
        label: label.clone(),
        star_label,
        plus_dimension: hilbert::dimension(&plus)?,
        minus_dimension: hilbert::dimension(&minus)?,
        plus,
        minus,
    })
}

/// Labels of the irreducibles, in output order.
pub fn labels(n: usize, ell: usize) -> Result<Vec<Label>> {
    match ell {
        0 => Err(Error::InvalidEll),
        1 => Ok(partitions_of(n).into_iter().map(Label::Partition).collect()),
        _ => Ok(multipartitions_of(n, ell)?
            .into_iter()
            .map(Label::Multi)
            .collect()),
    }
}

/// Blocks are computed in parallel and collected in label order.
pub fn centre_presentation(n: usize, ell: usize, simplified: bool) -> Result<CentrePresentation> {
    let blocks = labels(n, ell)?
        .par_iter()
        .map(|l| block(l, ell, simplified))
        .collect::<Result<Vec<_>>>()?;
    Ok(CentrePresentation { n, ell, blocks })
}

pub fn centre_dimension(n: usize, ell: usize) -> Result<u64> {
    Ok(centre_presentation(n, ell, true)?.total_dimension())
}

/// Block of the partition `λ ⊢ n` for `S_n`.
pub fn symmetric_block(lambda: &Partition, simplified: bool) -> Result<Block> {
    block(&Label::Partition(lambda.clone()), 1, simplified)
}
