//! Named graph families with canonical vertex numbering.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `P_n`: `0 - 1 - ... - n-1`.
    Path { n: usize },
    /// `C_n` in cyclic order.
    Cycle { n: usize },
    Complete { n: usize },
    /// `K_n` with a loop at every vertex.
    Total { n: usize },
    /// `K_{s,t}` with parts `0..s` and `s..s+t`.
    CompleteBipartite { s: usize, t: usize },
    /// `K_{1,leaves}` with center 0.
    Star { leaves: usize },
    /// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
    Petersen,
    RandomRegular { n: usize, k: usize, seed: u64 },
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Total { .. } => "total",
            FamilySpec::CompleteBipartite { .. } => "biclique",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Petersen => "petersen",
            FamilySpec::RandomRegular { .. } => "random-regular",
        }
    }

    fn invalid(&self, reason: impl Into<String>) -> Error {
        Error::InvalidFamily { family: self.tag(), reason: reason.into() }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Path { n } if n < 1 => Err(self.invalid("path needs n >= 1")),
            FamilySpec::Cycle { n } if n < 3 => Err(self.invalid("cycle needs n >= 3")),
            FamilySpec::Complete { n } if n < 1 => Err(self.invalid("complete needs n >= 1")),
            FamilySpec::Total { n } if n < 1 => Err(self.invalid("total needs n >= 1")),
            FamilySpec::CompleteBipartite { s, t } if s < 1 || t < 1 => {
                Err(self.invalid("biclique needs s >= 1 and t >= 1"))
            }
            FamilySpec::Star { leaves } if leaves < 1 => Err(self.invalid("star needs n >= 1 leaves")),
            FamilySpec::RandomRegular { n, k, .. } if k >= n => {
                Err(self.invalid(format!("random regular needs k < n (got n={n}, k={k})")))
            }
            FamilySpec::RandomRegular { n, k, .. } if (n * k) % 2 == 1 => {
                Err(self.invalid(format!("random regular needs n*k even (got n={n}, k={k})")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "P{n}"),
            FamilySpec::Cycle { n } => write!(f, "C{n}"),
            FamilySpec::Complete { n } => write!(f, "K{n}"),
            FamilySpec::Total { n } => write!(f, "T{n}"),
            FamilySpec::CompleteBipartite { s, t } => write!(f, "K{s},{t}"),
            FamilySpec::Star { leaves } => write!(f, "K1,{leaves}"),
            FamilySpec::Petersen => f.write_str("Petersen"),
            FamilySpec::RandomRegular { n, k, seed } => write!(f, "RR({n},{k},seed={seed})"),
        }
    }
}

/// The three second-factor families of the product theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cycle,
    Complete,
    Total,
}

impl Family {
    pub fn spec(self, n: usize) -> FamilySpec {
        match self {
            Family::Cycle => FamilySpec::Cycle { n },
            Family::Complete => FamilySpec::Complete { n },
            Family::Total => FamilySpec::Total { n },
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Total => "total",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "total" => Ok(Family::Total),
            other => Err(format!("unknown product family {other:?} (cycle|complete|total)")),
        }
    }
}

pub fn generate(spec: FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match spec {
        FamilySpec::Path { n } => Graph::new(n, (1..n).map(|i| (i - 1, i))),
        FamilySpec::Cycle { n } => Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))),
        FamilySpec::Complete { n } => Graph::new(n, complete_pairs(n)),
        FamilySpec::Total { n } => Graph::new(n, complete_pairs(n).chain((0..n).map(|u| (u, u)))),
        FamilySpec::CompleteBipartite { s, t } => {
            Graph::new(s + t, (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))))
        }
        FamilySpec::Star { leaves } => Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))),
        FamilySpec::Petersen => Graph::new(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
        ),
        FamilySpec::RandomRegular { n, k, seed } => random_regular(n, k, seed),
    }
}

fn complete_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Simple `k`-regular graph on `n` vertices from the pairing model.
///
/// The algorithm is part of the contract so that seeds reproduce: a
/// `ChaCha8Rng` is seeded with `seed_from_u64(seed)`; each attempt lists
/// every vertex `k` times in ascending order, shuffles the list with
/// `SliceRandom::shuffle`, and pairs consecutive entries. An attempt that
/// yields a loop or a repeated pair is discarded and the next attempt
/// continues from the same generator stream.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    FamilySpec::RandomRegular { n, k, seed }.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    loop {
        let mut shuffled = points.clone();
        shuffled.shuffle(&mut rng);
        let mut seen = BTreeSet::new();
        let ok = shuffled.chunks_exact(2).all(|pair| {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            u != v && seen.insert((u, v))
        });
        if ok {
            return Graph::new(n, seen);
        }
    }
}
