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

use std::collections::{BTreeSet, VecDeque};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, LayoutError, ParseError};

/// Undirected device connectivity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CouplingMap {
    adjacency: Vec<BTreeSet<usize>>,
}

impl CouplingMap {
    pub fn new(num_physical: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, LayoutError> {
        let mut adjacency = vec![BTreeSet::new(); num_physical];
        for (a, b) in edges {
            if a == b {
                return Err(LayoutError::SelfLoop(a));
            }
            for q in [a, b] {
                if q >= num_physical {
                    return Err(LayoutError::NoSuchPhysical { qubit: q, num_physical });
                }
            }
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        Ok(CouplingMap { adjacency })
    }

    /// `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Self {
        CouplingMap::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn num_physical(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, q: usize) -> &BTreeSet<usize> {
        &self.adjacency[q]
    }

    pub fn degree(&self, q: usize) -> usize {
        self.adjacency[q].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency.get(a).is_some_and(|s| s.contains(&b))
    }

    /// Edges with `a < b`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, ns) in self.adjacency.iter().enumerate() {
            out.extend(ns.range(a + 1..).map(|&b| (a, b)));
        }
        out
    }

    /// BFS hop counts from `src`; `None` for unreachable qubits.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.num_physical()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(q) = queue.pop_front() {
            let d = dist[q].unwrap_or(0);
            for &r in &self.adjacency[q] {
                if dist[r].is_none() {
                    dist[r] = Some(d + 1);
                    queue.push_back(r);
                }
            }
        }
        dist
    }

    /// Lexicographically smallest shortest path from `a` to `b`, both ends
    /// included.
    pub fn shortest_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let dist = self.distances_from(b);
        let mut d = dist[a]?;
        let mut path = vec![a];
        let mut cur = a;
        while d > 0 {
            cur = *self.adjacency[cur].iter().find(|&&r| dist[r] == Some(d - 1))?;
            path.push(cur);
            d -= 1;
        }
        Some(path)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("qubits {}\n", self.num_physical());
        for (a, b) in self.edges() {
            s.push_str(&format!("{a}-{b}\n"));
        }
        s
    }
}

/// Parses an edge list: an optional `qubits N` line first, then `a-b`
/// pairs separated by commas, whitespace or newlines. `#` starts a comment.
/// Without the header the device is sized by the largest index.
pub fn parse_coupling_map(src: &str) -> Result<CouplingMap, ParseError> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut seen_content = false;
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        if let Some(rest) = text.strip_prefix("qubits") {
            if seen_content {
                return Err(ParseError::new(line, "`qubits` must come before any edge"));
            }
            let n = rest.trim().parse::<usize>().map_err(|_| ParseError::new(line, format!("bad qubit count `{}`", rest.trim())))?;
            declared = Some(n);
            seen_content = true;
            continue;
        }
        seen_content = true;
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let (a, b) = tok.split_once('-').ok_or_else(|| ParseError::new(line, format!("expected `a-b`, found `{tok}`")))?;
            let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| ParseError::new(line, format!("bad qubit index `{s}`")));
            let (a, b) = (parse(a)?, parse(b)?);
            if a == b {
                return Err(ParseError::new(line, format!("self-loop on qubit {a}")));
            }
            if let Some(n) = declared {
                if a.max(b) >= n {
                    return Err(ParseError::new(line, format!("qubit {} exceeds declared count {n}", a.max(b))));
                }
            }
            edges.push((a, b));
        }
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0));
    CouplingMap::new(n, edges).map_err(|e| ParseError::new(0, e.to_string()))
}

pub fn load_coupling_map(path: impl AsRef<Path>) -> Result<CouplingMap, Error> {
    let src = std::fs::read_to_string(path)?;
    Ok(parse_coupling_map(&src)?)
}

/// 127-qubit heavy-hex lattice (IBM Eagle numbering): seven rows of 14 or
/// 15 qubits joined by four bridge qubits per gap, bridge columns
/// alternating between `0,4,8,12` and `2,6,10,14`.
pub fn heavy_hex_127() -> CouplingMap {
    // (first index, first column, length)
    let rows: [(usize, usize, usize); 7] =
        [(0, 0, 14), (18, 0, 15), (37, 0, 15), (56, 0, 15), (75, 0, 15), (94, 0, 15), (113, 1, 14)];
    let at = |r: usize, col: usize| {
        let (start, first, _) = rows[r];
        start + col - first
    };
    let mut edges = Vec::new();
    for &(start, _, len) in &rows {
        edges.extend((start..start + len - 1).map(|q| (q, q + 1)));
    }
    for gap in 0..6 {
        let bridge0 = rows[gap].0 + rows[gap].2;
        let cols: [usize; 4] = if gap % 2 == 0 { [0, 4, 8, 12] } else { [2, 6, 10, 14] };
        for (k, col) in cols.into_iter().enumerate() {
            let b = bridge0 + k;
            edges.push((at(gap, col), b));
            edges.push((b, at(gap + 1, col)));
        }
    }
    CouplingMap::new(127, edges).expect("heavy-hex edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heavy_hex_neighborhoods() {
        let m = heavy_hex_127();
        assert_eq!(m.num_physical(), 127);
        assert_eq!(m.edges().len(), 144);
        assert_eq!(m.neighbors(4).iter().copied().collect::<Vec<_>>(), [3, 5, 15]);
        assert_eq!(m.neighbors(0).iter().copied().collect::<Vec<_>>(), [1, 14]);
        assert_eq!(m.max_degree(), 3);
        for (a, b) in [(0, 14), (14, 18), (20, 33), (33, 39), (37, 52), (52, 56), (96, 109), (109, 114), (108, 112), (112, 126)] {
            assert!(m.has_edge(a, b), "{a}-{b}");
        }
        assert!(m.distances_from(0).iter().all(Option::is_some));
    }

    #[test]
    fn parses_edge_lists() {
        let m = parse_coupling_map("0-1,1-2").unwrap();
        assert_eq!(m.neighbors(1).iter().copied().collect::<Vec<_>>(), [0, 2]);
        let m = parse_coupling_map("# device\nqubits 5\n0-1 1-2\n\n3-4 # tail\n").unwrap();
        assert_eq!(m.num_physical(), 5);
        assert_eq!(m.edges(), [(0, 1), (1, 2), (3, 4)]);
        assert_eq!(parse_coupling_map(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert_eq!(parse_coupling_map("0-1\n1_2\n").unwrap_err().line, 2);
        assert_eq!(parse_coupling_map("qubits 2\n0-1\n1-2\n").unwrap_err().line, 3);
        assert_eq!(parse_coupling_map("0-1\nqubits 2\n").unwrap_err().line, 2);
        assert_eq!(parse_coupling_map("3-3").unwrap_err().line, 1);
    }

    #[test]
    fn shortest_paths_prefer_low_indices() {
        // square 0-1-3, 0-2-3
        let m = CouplingMap::new(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(m.shortest_path(0, 3).unwrap(), [0, 1, 3]);
        let d = CouplingMap::new(3, [(0, 1)]).unwrap();
        assert_eq!(d.shortest_path(0, 2), None);
    }
}
