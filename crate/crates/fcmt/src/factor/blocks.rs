use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, MonoidPresentation};

/// A finite list of classes in `ℤʳ ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/dₖ`, repetitions allowed.
///
/// Each class has `r + k` entries; the last `k` are residues.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSpec {
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub torsion: Vec<i64>,
    pub classes: Vec<Vec<i64>>,
}

impl BlockSpec {
    pub fn new(rank: usize, classes: Vec<Vec<i64>>) -> Result<Self> {
        let spec = BlockSpec {
            rank,
            torsion: Vec::new(),
            classes,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_torsion(rank: usize, torsion: Vec<i64>, classes: Vec<Vec<i64>>) -> Result<Self> {
        let spec = BlockSpec {
            rank,
            torsion,
            classes,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: BlockSpec = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if let Some(d) = self.torsion.iter().find(|&&d| d < 2) {
            return Err(Error::input(format!("torsion modulus {d} must be at least 2")));
        }
        let width = self.rank + self.torsion.len();
        if let Some(c) = self.classes.iter().find(|c| c.len() != width) {
            return Err(Error::input(format!(
                "class {c:?} has {} entries, expected {width}",
                c.len()
            )));
        }
        Ok(())
    }
}

/// Zero-sum sequences over the classes, one coordinate per class in input
/// order. Each torsion component `ℤ/d` adds a slack coordinate `s` with
/// `Σ residues − d·s = 0`, appended after the class coordinates; the slack is
/// determined by the class coordinates.
pub fn block_monoid(spec: &BlockSpec) -> MonoidPresentation {
    let n = spec.classes.len();
    let k = spec.torsion.len();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..spec.rank {
        let mut row: Vec<BigInt> = spec.classes.iter().map(|c| BigInt::from(c[i])).collect();
        row.resize(n + k, BigInt::from(0));
        rows.push(row);
    }
    for (i, &d) in spec.torsion.iter().enumerate() {
        let mut row: Vec<BigInt> = spec
            .classes
            .iter()
            .map(|c| BigInt::from(c[spec.rank + i].rem_euclid(d)))
            .collect();
        row.resize(n + k, BigInt::from(0));
        row[n + i] = BigInt::from(-d);
        rows.push(row);
    }
    let equations = if rows.is_empty() {
        IntMatrix::zeros(0, n + k)
    } else {
        IntMatrix::from_big_rows(rows, n + k).expect("consistent widths")
    };
    MonoidPresentation::new(equations, 0).expect("class entries within coefficient range")
}
