// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::map::CouplingMap;
use crate::error::LayoutError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// `out` is adjacent to every input.
    OptimalN,
    /// Some input is not adjacent to `out`; routing will add SWAPs.
    CriticalN,
}

/// Logical-to-physical assignment. For operator circuits logical qubits
/// `0..n-1` are the inputs and `n-1` is `out`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placement {
    pub physical: Vec<usize>,
    pub classification: Classification,
    pub swap_estimate: usize,
}

impl Placement {
    /// Checks the assignment against `map` and classifies it with the last
    /// logical qubit as `out`.
    pub fn new(physical: Vec<usize>, map: &CouplingMap) -> Result<Self, LayoutError> {
        let mut seen = BTreeSet::new();
        for &p in &physical {
            if p >= map.num_physical() {
                return Err(LayoutError::NoSuchPhysical { qubit: p, num_physical: map.num_physical() });
            }
            if !seen.insert(p) {
                return Err(LayoutError::NotInjective(p));
            }
        }
        let Some((&out, inputs)) = physical.split_last() else {
            return Ok(Placement { physical, classification: Classification::OptimalN, swap_estimate: 0 });
        };
        let dist = map.distances_from(out);
        let mut estimate = 0;
        for &q in inputs {
            let d = dist[q].ok_or(LayoutError::Disconnected(q, out))?;
            estimate += d - 1;
        }
        let classification = if estimate == 0 { Classification::OptimalN } else { Classification::CriticalN };
        Ok(Placement { physical, classification, swap_estimate: estimate })
    }

    pub fn len(&self) -> usize {
        self.physical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.physical.is_empty()
    }

    pub fn out(&self) -> Option<usize> {
        self.physical.last().copied()
    }
}

fn star_at(map: &CouplingMap, n: usize, center: usize) -> Option<Placement> {
    if map.degree(center) < n - 1 {
        return None;
    }
    let mut physical: Vec<usize> = map.neighbors(center).iter().copied().take(n - 1).collect();
    physical.push(center);
    Some(Placement { physical, classification: Classification::OptimalN, swap_estimate: 0 })
}

/// Puts `out` on a qubit with at least `n-1` neighbours and the inputs on
/// its lowest-index neighbours. `preferred_target` is tried first, then
/// every qubit in ascending order.
pub fn find_star_placement(map: &CouplingMap, n: usize, preferred_target: Option<usize>) -> Option<Placement> {
    if n < 2 {
        return None;
    }
    let preferred = preferred_target.filter(|&p| p < map.num_physical());
    preferred.into_iter().chain(0..map.num_physical()).find_map(|c| star_at(map, n, c))
}

/// `out` on `target` (or the lowest-index qubit of maximum degree), inputs
/// on the nearest other qubits, ties broken by index.
pub fn nearest_placement(map: &CouplingMap, n: usize, target: Option<usize>) -> Result<Placement, LayoutError> {
    let center = match target {
        Some(t) if t < map.num_physical() => t,
        Some(t) => return Err(LayoutError::NoSuchPhysical { qubit: t, num_physical: map.num_physical() }),
        None => (0..map.num_physical()).max_by_key(|&q| (map.degree(q), std::cmp::Reverse(q))).ok_or(LayoutError::Unplaced(0))?,
    };
    let dist = map.distances_from(center);
    let mut others: Vec<(usize, usize)> =
        dist.iter().enumerate().filter(|&(q, _)| q != center).filter_map(|(q, d)| d.map(|d| (d, q))).collect();
    others.sort_unstable();
    if others.len() + 1 < n {
        return Err(LayoutError::Unplaced(others.len() + 1));
    }
    let mut physical: Vec<usize> = others.iter().take(n - 1).map(|&(_, q)| q).collect();
    physical.sort_unstable();
    physical.push(center);
    Placement::new(physical, map)
}

/// Star placement when one exists, otherwise [`nearest_placement`].
pub fn place_operator(map: &CouplingMap, n: usize, target: Option<usize>) -> Result<Placement, LayoutError> {
    match find_star_placement(map, n, target) {
        Some(p) => Ok(p),
        None => nearest_placement(map, n, target),
    }
}

/// `k` qubits grown as a random connected region from a random seed qubit,
/// then assigned to logical qubits in random order. Deterministic for a
/// given `seed`.
pub fn random_connected_placement(map: &CouplingMap, k: usize, seed: u64) -> Result<Placement, LayoutError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let np = map.num_physical();
    if k > np {
        return Err(LayoutError::Unplaced(np));
    }
    if k == 0 {
        return Placement::new(Vec::new(), map);
    }
    for _ in 0..64 {
        let start = rng.gen_range(0..np);
        let mut region = vec![start];
        let mut frontier: BTreeSet<usize> = map.neighbors(start).clone();
        while region.len() < k && !frontier.is_empty() {
            let pick = *frontier.iter().nth(rng.gen_range(0..frontier.len())).expect("nonempty");
            frontier.remove(&pick);
            region.push(pick);
            for &r in map.neighbors(pick) {
                if !region.contains(&r) {
                    frontier.insert(r);
                }
            }
        }
        if region.len() == k {
            region.shuffle(&mut rng);
            return Placement::new(region, map);
        }
    }
    Err(LayoutError::Unplaced(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::heavy_hex_127;

    #[test]
    fn star_on_heavy_hex() {
        let m = heavy_hex_127();
        let p = find_star_placement(&m, 4, Some(4)).unwrap();
        assert_eq!(p.physical, [3, 5, 15, 4]);
        assert_eq!(p.classification, Classification::OptimalN);
        let p3 = find_star_placement(&m, 3, None).unwrap();
        assert_eq!(p3.physical, [1, 14, 0]);
        assert!(find_star_placement(&m, 4, None).is_some());
        assert!(find_star_placement(&m, 5, None).is_none());
    }

    #[test]
    fn star_on_path_uses_the_middle() {
        let p = find_star_placement(&CouplingMap::path(3), 3, None).unwrap();
        assert_eq!(p.out(), Some(1));
    }

    #[test]
    fn five_qubits_fall_back_to_nearest() {
        let m = heavy_hex_127();
        let p = place_operator(&m, 5, Some(4)).unwrap();
        assert_eq!(p.classification, Classification::CriticalN);
        assert_eq!(p.out(), Some(4));
        assert_eq!(p.swap_estimate, 1);
    }

    #[test]
    fn random_placement_is_connected_and_seeded() {
        let m = heavy_hex_127();
        let a = random_connected_placement(&m, 5, 7).unwrap();
        assert_eq!(a, random_connected_placement(&m, 5, 7).unwrap());
        let set: Vec<usize> = a.physical.clone();
        for &q in &set {
            assert!(set.len() == 1 || m.neighbors(q).iter().any(|r| set.contains(r)));
        }
    }

    #[test]
    fn rejects_bad_placements() {
        let m = CouplingMap::path(3);
        assert!(matches!(Placement::new(vec![0, 0], &m), Err(LayoutError::NotInjective(0))));
        assert!(matches!(Placement::new(vec![0, 5], &m), Err(LayoutError::NoSuchPhysical { .. })));
    }
}
