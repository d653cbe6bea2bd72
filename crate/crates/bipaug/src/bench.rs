//! Size ladders over tree families with long reduction phases.

use std::str::FromStr;
use std::time::{Duration, Instant};

use bipaug_core::{
    augment_with, generate_instance, AugmentError, BipartiteGraph, InstanceKind, OpCounters, SolveOptions,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Center with chains of lengths 1, 2, 1, 2, ...; one massive vertex.
    Spider,
    /// Spine of `n / 4` vertices with three legs each.
    Caterpillar,
    /// Two adjacent hubs with `n / 2 - 1` bristles each.
    Broom,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Spider, Family::Caterpillar, Family::Broom];

    pub fn name(self) -> &'static str {
        match self {
            Family::Spider => "spider",
            Family::Caterpillar => "caterpillar",
            Family::Broom => "broom",
        }
    }

    /// The member of the family with about `n` vertices.
    pub fn instance(self, n: usize) -> BipartiteGraph {
        let kind = match self {
            Family::Spider => {
                let mut chains = Vec::new();
                let mut left = n.saturating_sub(1).max(2);
                while left > 0 {
                    let c = (1 + chains.len() % 2).min(left);
                    chains.push(c);
                    left -= c;
                }
                InstanceKind::Spider { chains }
            }
            Family::Caterpillar => InstanceKind::Caterpillar {
                spine: (n / 4).max(1),
                legs: 3,
            },
            Family::Broom => InstanceKind::Broom {
                bristles: (n / 2).saturating_sub(1),
            },
        };
        generate_instance(&kind, 0).expect("family parameters are valid")
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family `{s}` (spider, caterpillar, broom)"))
    }
}

/// Accepts plain integers and forms like `1e4` or `2.5e3`.
pub fn parse_size(s: &str) -> Result<usize, String> {
    if let Ok(n) = s.parse::<usize>() {
        return Ok(n);
    }
    let x: f64 = s.parse().map_err(|_| format!("invalid size `{s}`"))?;
    if x < 0.0 || x.fract() != 0.0 || x > 1e12 {
        return Err(format!("invalid size `{s}`"));
    }
    Ok(x as usize)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub family: Family,
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub size: usize,
    /// Fastest of the repeated runs.
    pub time: Duration,
    pub counters: OpCounters,
}

impl BenchRow {
    pub fn nanos_per_element(&self) -> f64 {
        self.time.as_nanos() as f64 / (self.vertices + self.edges) as f64
    }
}

pub fn run_one(family: Family, n: usize, repeat: usize) -> Result<BenchRow, AugmentError> {
    Ok(run_ladder(family, &[n], repeat)?.remove(0))
}

/// Each round solves every size once; a size reports its fastest round.
pub fn run_ladder(family: Family, sizes: &[usize], repeat: usize) -> Result<Vec<BenchRow>, AugmentError> {
    let opts = SolveOptions { audit: false };
    let graphs: Vec<BipartiteGraph> = sizes.iter().map(|&n| family.instance(n)).collect();
    let mut rows: Vec<BenchRow> = sizes
        .iter()
        .zip(&graphs)
        .map(|(&n, g)| BenchRow {
            family,
            n,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            size: 0,
            time: Duration::MAX,
            counters: OpCounters::default(),
        })
        .collect();
    for _ in 0..repeat.max(1) {
        for (row, g) in rows.iter_mut().zip(&graphs) {
            let start = Instant::now();
            let result = augment_with(g, &opts)?;
            row.time = row.time.min(start.elapsed());
            row.size = result.size();
            row.counters = result.counters;
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(parse_size("1e4"), Ok(10_000));
        assert_eq!(parse_size("2.5e3"), Ok(2500));
        assert_eq!(parse_size("80000"), Ok(80_000));
        assert!(parse_size("1.5").is_err());
        assert!(parse_size("x").is_err());
    }

    #[test]
    fn families_hit_n() {
        for f in Family::ALL {
            let g = f.instance(1000);
            assert!(g.vertex_count().abs_diff(1000) <= 4, "{} {}", f.name(), g.vertex_count());
        }
    }

    #[test]
    fn small_ladder() {
        let rows = run_ladder(Family::Spider, &[100, 200], 1).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows[1].counters.total() > rows[0].counters.total());
    }
}
