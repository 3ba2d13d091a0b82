use serde::Serialize;

use super::glue::GlueSpec;
use super::ranks::{rank_table, RankTable};
use super::types::RingType;
use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, MonoidPresentation};

/// The monoid of MCM modules over a ring with the given completion and
/// gluing, embedded in the monoid of the completion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogPresentation {
    pub ring: RingType,
    pub glue: GlueSpec,
    pub table: RankTable,
    #[serde(skip)]
    pub presentation: MonoidPresentation,
    /// For each coordinate, the indecomposables (indices into
    /// `table.modules()`) it counts; merged coordinates count several
    /// modules that must occur with equal multiplicity.
    pub coordinates: Vec<Vec<usize>>,
}

/// Builds `𝔠(R)` inside `ℕᵗ`: an `R̂`-module is extended from `R` exactly
/// when its ranks agree at glued primes, giving one equation per glued pair.
///
/// A row `c·xₐ − c·x_b = 0` forces `xₐ = x_b`; such pairs are merged into one
/// coordinate. Coordinates with zero columns are moved to the free part.
pub fn monoid_presentation(ring: RingType, glue: &GlueSpec) -> Result<CatalogPresentation> {
    let table = rank_table(ring);
    glue.validate(table.num_primes).map_err(|e| match e {
        Error::Input(msg) => Error::input(format!("glue {glue} does not fit {ring}: {msg}")),
        other => other,
    })?;
    let modules = table.modules();
    let mut rows: Vec<Vec<i64>> = glue
        .pairs()
        .iter()
        .map(|&(i, j)| {
            modules
                .iter()
                .map(|r| r[i - 1] as i64 - r[j - 1] as i64)
                .collect()
        })
        .collect();
    let mut coordinates: Vec<Vec<usize>> = (0..modules.len()).map(|j| vec![j]).collect();

    while let Some((row, a, b)) = forced_pair(&rows) {
        rows.remove(row);
        for r in rows.iter_mut() {
            let vb = r.remove(b);
            r[a] += vb;
        }
        let merged = coordinates.remove(b);
        coordinates[a].extend(merged);
    }

    let t = coordinates.len();
    let eq = if rows.is_empty() {
        IntMatrix::zeros(0, t)
    } else {
        IntMatrix::from_rows(&rows, t)?
    };
    let (presentation, order) = MonoidPresentation::new(eq, 0)?.normalize_free();
    let coordinates = order.iter().map(|&j| coordinates[j].clone()).collect();
    Ok(CatalogPresentation {
        ring,
        glue: glue.clone(),
        table,
        presentation,
        coordinates,
    })
}

fn forced_pair(rows: &[Vec<i64>]) -> Option<(usize, usize, usize)> {
    rows.iter().enumerate().find_map(|(i, row)| {
        let nz: Vec<usize> = (0..row.len()).filter(|&j| row[j] != 0).collect();
        (nz.len() == 2 && row[nz[0]] == -row[nz[1]]).then(|| (i, nz[0], nz[1]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(ring: &str, m: usize, case: Option<u8>) -> CatalogPresentation {
        let ring: RingType = ring.parse().unwrap();
        let glue = GlueSpec::from_m(ring.num_primes(), m, case).unwrap();
        monoid_presentation(ring, &glue).unwrap()
    }

    #[test]
    fn odd_a_is_free() {
        for n in 0..4u32 {
            let c = build(&format!("A{}", 2 * n + 1), 1, None);
            assert_eq!(c.presentation.num_equations(), 0);
            assert_eq!(c.presentation.dim(), n as usize + 2);
            assert_eq!(c.coordinates[0], vec![0, 1]);
        }
    }

    #[test]
    fn d6_shapes() {
        let c = build("D6", 2, None);
        let p = &c.presentation;
        assert_eq!((p.num_equations(), p.constrained_dim(), p.free_rank()), (2, 8, 5));
        let c1 = build("D6", 1, Some(1));
        assert_eq!((c1.presentation.constrained_dim(), c1.presentation.free_rank()), (6, 7));
        let c2 = build("D6", 1, Some(2));
        assert_eq!((c2.presentation.constrained_dim(), c2.presentation.free_rank()), (4, 9));
    }

    #[test]
    fn d2_single_row() {
        let c = build("D2:2", 1, None);
        assert_eq!(c.presentation.coefficients(), &[vec![1, -1, -1, -1, 1, 1]]);
        assert_eq!(c.presentation.free_rank(), 5);
    }

    #[test]
    fn unglued_is_free() {
        let c = build("E7", 0, None);
        assert_eq!(c.presentation.dim(), 15);
        assert_eq!(c.presentation.num_equations(), 0);
    }

    #[test]
    fn bad_glue() {
        let ring: RingType = "E6".parse().unwrap();
        let glue = GlueSpec { groups: vec![vec![1, 2]] };
        assert!(matches!(monoid_presentation(ring, &glue), Err(Error::Input(_))));
    }
}
