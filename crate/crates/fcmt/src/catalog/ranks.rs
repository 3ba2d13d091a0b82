use serde::Serialize;

use super::types::{Family, RingType};

/// Rank vectors of the indecomposable MCM modules with their multiplicities,
/// in the fixed row order of the rank classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankTable {
    pub num_primes: usize,
    pub entries: Vec<(Vec<u32>, usize)>,
}

impl RankTable {
    fn new(num_primes: usize, entries: &[(&[u32], usize)]) -> Self {
        RankTable {
            num_primes,
            entries: entries.iter().map(|(r, m)| (r.to_vec(), *m)).collect(),
        }
    }

    /// Number of indecomposables.
    pub fn size(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// One rank vector per indecomposable, multiplicity blocks contiguous.
    pub fn modules(&self) -> Vec<Vec<u32>> {
        self.entries
            .iter()
            .flat_map(|(r, m)| std::iter::repeat_n(r.clone(), *m))
            .collect()
    }
}

pub fn rank_table(t: RingType) -> RankTable {
    let n = t.n as usize;
    let mut table = match t.family {
        Family::A if n.is_multiple_of(2) => RankTable::new(1, &[(&[1], n / 2 + 1)]),
        Family::A => {
            let m = (n - 1) / 2;
            RankTable::new(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], m + 1)])
        }
        Family::D if n.is_multiple_of(2) => {
            let m = (n - 2) / 2;
            RankTable::new(
                3,
                &[
                    (&[1, 0, 0], 1),
                    (&[0, 1, 0], 1),
                    (&[0, 0, 1], 1),
                    (&[1, 1, 0], 1),
                    (&[1, 0, 1], 1),
                    (&[0, 1, 1], m),
                    (&[1, 1, 1], 2 * m + 1),
                    (&[2, 1, 1], m - 1),
                ],
            )
        }
        Family::D => {
            let m = (n - 3) / 2;
            RankTable::new(
                2,
                &[(&[1, 0], 1), (&[0, 1], m + 1), (&[1, 1], 2 * m + 2), (&[2, 1], m)],
            )
        }
        Family::E6 => RankTable::new(1, &[(&[1], 5), (&[2], 2)]),
        Family::E7 => RankTable::new(
            2,
            &[
                (&[1, 0], 1),
                (&[0, 1], 2),
                (&[1, 1], 6),
                (&[1, 2], 1),
                (&[2, 1], 2),
                (&[2, 2], 3),
            ],
        ),
        Family::E8 => RankTable::new(1, &[(&[1], 7), (&[2], 7), (&[3], 3)]),
        Family::A2 => RankTable::new(1, &[(&[1], n + 2)]),
        Family::D2 => RankTable::new(
            2,
            &[(&[1, 0], 1), (&[0, 1], n + 1), (&[1, 1], 2 * n + 1), (&[2, 1], n)],
        ),
        Family::D3 => RankTable::new(1, &[(&[1], 4), (&[2], 1)]),
    };
    if t.primed {
        let ones = table
            .entries
            .iter_mut()
            .find(|(r, _)| r.iter().all(|&x| x == 1))
            .expect("every table lists the free module");
        ones.1 -= 1;
    }
    table
}
