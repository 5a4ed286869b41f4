//! Searches over the power automaton.
//!
//! Nodes are either plain subsets (length objective) or subsets tagged with
//! the last symbol read (switch objectives). A tagged node id is
//! `set * (k + 1) + tag`, where tag 0 means nothing has been read yet and
//! tag `s + 1` means the last symbol was `s`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use super::store::{node_count, NodeMap};
use super::{SearchNode, SyncError};
use crate::automaton::{Dfa, StateSet, Word};

/// Lexicographic `(switches, length)` packed into one integer.
type Cost = u64;

const SWITCH: Cost = 1 << 32;

pub(crate) fn unpack(cost: Cost) -> (usize, usize) {
    ((cost >> 32) as usize, (cost & 0xffff_ffff) as usize)
}

/// Breadth-first distance from the full set to the nearest singleton.
pub(crate) fn shortest_length(dfa: &Dfa) -> Result<usize, SyncError> {
    let start = dfa.full_set();
    if start.is_singleton() {
        return Ok(0);
    }
    let mut seen: NodeMap<()> = NodeMap::for_node_count(node_count(dfa.n(), 1));
    seen.insert(start.bits(), ());
    let mut frontier = vec![start];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &set in &frontier {
            for s in 0..dfa.k() {
                let img = dfa.image(set, s);
                if img.is_singleton() {
                    return Ok(depth);
                }
                if seen.get(img.bits()).is_none() {
                    seen.insert(img.bits(), ());
                    next.push(img);
                }
            }
        }
        frontier = next;
    }
    Err(SyncError::NotSynchronizing)
}

/// Minimal switch count by 0/1-weighted search over tagged nodes.
///
/// Reading the same symbol as the previous one costs 0, anything else 1.
/// A reusable scratch keeps the hot enumeration loops allocation free.
#[derive(Default)]
pub struct SwitchSearch {
    dist: Vec<u32>,
    deque: VecDeque<(u64, u32)>,
}

impl SwitchSearch {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn min_switch_count(&mut self, dfa: &Dfa) -> Result<usize, SyncError> {
        let (n, k) = (dfa.n(), dfa.k());
        let count = node_count(n, k + 1);
        if count <= 1 << 22 {
            self.dist.clear();
            self.dist.resize(count as usize, u32::MAX);
            self.dense(dfa)
        } else {
            let mut map: NodeMap<u32> = NodeMap::for_node_count(count);
            sparse_zero_one(dfa, &mut self.deque, &mut map)
        }
    }

    fn dense(&mut self, dfa: &Dfa) -> Result<usize, SyncError> {
        let k1 = dfa.k() as u64 + 1;
        let dist = &mut self.dist;
        let deque = &mut self.deque;
        deque.clear();
        let src = dfa.full_set().bits() * k1;
        dist[src as usize] = 0;
        deque.push_back((src, 0));
        while let Some((u, d)) = deque.pop_front() {
            if d > dist[u as usize] {
                continue;
            }
            let set = StateSet::from_bits(u / k1);
            if set.is_singleton() {
                return Ok(d as usize);
            }
            let tag = u % k1;
            for s in 0..dfa.k() {
                let v = dfa.image(set, s).bits() * k1 + s as u64 + 1;
                let same = tag == s as u64 + 1;
                let nd = d + u32::from(!same);
                if nd < dist[v as usize] {
                    dist[v as usize] = nd;
                    if same {
                        deque.push_front((v, nd));
                    } else {
                        deque.push_back((v, nd));
                    }
                }
            }
        }
        Err(SyncError::NotSynchronizing)
    }
}

fn sparse_zero_one(dfa: &Dfa, deque: &mut VecDeque<(u64, u32)>, dist: &mut NodeMap<u32>) -> Result<usize, SyncError> {
    let k1 = dfa.k() as u64 + 1;
    deque.clear();
    let src = dfa.full_set().bits() * k1;
    dist.insert(src, 0);
    deque.push_back((src, 0));
    while let Some((u, d)) = deque.pop_front() {
        if dist.get(u).is_some_and(|best| d > best) {
            continue;
        }
        let set = StateSet::from_bits(u / k1);
        if set.is_singleton() {
            return Ok(d as usize);
        }
        let tag = u % k1;
        for s in 0..dfa.k() {
            let v = dfa.image(set, s).bits() * k1 + s as u64 + 1;
            let same = tag == s as u64 + 1;
            let nd = d + u32::from(!same);
            if dist.get(v).is_none_or(|old| nd < old) {
                dist.insert(v, nd);
                if same {
                    deque.push_front((v, nd));
                } else {
                    deque.push_back((v, nd));
                }
            }
        }
    }
    Err(SyncError::NotSynchronizing)
}

/// Result of a lexicographic optimization: the optimal cost, the smallest
/// optimal word, and the number of optimal words (None on overflow).
pub(crate) struct Optimum {
    pub cost: Cost,
    pub word: Word,
    pub count: Option<u128>,
}

struct Graph<'a> {
    dfa: &'a Dfa,
    tagged: bool,
}

impl Graph<'_> {
    fn k1(&self) -> u64 {
        self.dfa.k() as u64 + 1
    }

    fn source(&self) -> u64 {
        let bits = self.dfa.full_set().bits();
        if self.tagged {
            bits * self.k1()
        } else {
            bits
        }
    }

    fn set_of(&self, node: u64) -> StateSet {
        StateSet::from_bits(if self.tagged { node / self.k1() } else { node })
    }

    #[inline]
    fn edge(&self, node: u64, s: usize) -> (u64, Cost) {
        if self.tagged {
            let k1 = self.k1();
            let img = self.dfa.image(StateSet::from_bits(node / k1), s);
            let same = node % k1 == s as u64 + 1;
            (img.bits() * k1 + s as u64 + 1, if same { 1 } else { SWITCH + 1 })
        } else {
            (self.dfa.image(StateSet::from_bits(node), s).bits(), 1)
        }
    }
}

/// Minimizes `length` (untagged) or `(switches, length)` (tagged) over all
/// synchronizing words.
///
/// Dijkstra settles every node whose cost does not exceed the optimum. The
/// tight edges among settled nodes (`dist(v) = dist(u) + w`) form a DAG
/// whose source-to-target paths are exactly the optimal words; it is walked
/// backward to mark nodes that reach an optimal target, then greedily
/// forward by smallest symbol, and counted forward in settle order.
pub(crate) fn lexicographic_optimum(dfa: &Dfa, tagged: bool) -> Result<Optimum, SyncError> {
    let g = Graph { dfa, tagged };
    let k = dfa.k();
    let tags = if tagged { k + 1 } else { 1 };
    let mut dist: NodeMap<Cost> = NodeMap::for_node_count(node_count(dfa.n(), tags));
    let mut heap = BinaryHeap::new();
    let mut settled: Vec<u64> = Vec::new();
    let mut best: Option<Cost> = None;

    let src = g.source();
    dist.insert(src, 0);
    heap.push(Reverse((0, src)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if dist.get(u).is_some_and(|cur| d > cur) {
            continue;
        }
        if best.is_some_and(|b| d > b) {
            break;
        }
        settled.push(u);
        if g.set_of(u).is_singleton() {
            best.get_or_insert(d);
            continue;
        }
        if best == Some(d) {
            continue;
        }
        for s in 0..k {
            let (v, w) = g.edge(u, s);
            let nd = d + w;
            if dist.get(v).is_none_or(|old| nd < old) {
                dist.insert(v, nd);
                heap.push(Reverse((nd, v)));
            }
        }
    }
    let best = best.ok_or(SyncError::NotSynchronizing)?;

    let is_target = |u: u64| g.set_of(u).is_singleton();
    let tight = |u: u64, s: usize| -> Option<u64> {
        let du = dist.get(u)?;
        let (v, w) = g.edge(u, s);
        let nd = du + w;
        (nd <= best && dist.get(v) == Some(nd)).then_some(v)
    };

    // Backward pass: which settled nodes lie on an optimal path.
    let mut good: NodeMap<bool> = NodeMap::for_node_count(node_count(dfa.n(), tags));
    for &u in settled.iter().rev() {
        let ok = if is_target(u) {
            dist.get(u) == Some(best)
        } else {
            (0..k).any(|s| tight(u, s).is_some_and(|v| good.get(v) == Some(true)))
        };
        good.insert(u, ok);
    }

    let mut word = Vec::new();
    let mut u = src;
    while !is_target(u) {
        let (s, v) = (0..k)
            .find_map(|s| tight(u, s).filter(|&v| good.get(v) == Some(true)).map(|v| (s, v)))
            .expect("a good node always has a good tight successor");
        word.push(s);
        u = v;
    }

    // Forward pass: count optimal paths, saturating at u128::MAX.
    let mut paths: NodeMap<u128> = NodeMap::for_node_count(node_count(dfa.n(), tags));
    paths.insert(src, 1);
    let mut total: u128 = 0;
    for &u in &settled {
        let Some(c) = paths.get(u) else { continue };
        if is_target(u) {
            if dist.get(u) == Some(best) {
                total = total.saturating_add(c);
            }
            continue;
        }
        for s in 0..k {
            if let Some(v) = tight(u, s) {
                paths.insert(v, paths.get(v).unwrap_or(0).saturating_add(c));
            }
        }
    }
    let total = (total != u128::MAX).then_some(total);

    Ok(Optimum {
        cost: best,
        word: Word::new(word),
        count: total,
    })
}

impl SearchNode {
    /// Dense id of this node for an alphabet of `k` symbols.
    pub fn index(&self, k: usize) -> u64 {
        let tag = self.last.map_or(0, |s| s as u64 + 1);
        self.set.bits() * (k as u64 + 1) + tag
    }

    pub fn from_index(index: u64, k: usize) -> Self {
        let k1 = k as u64 + 1;
        let tag = index % k1;
        SearchNode {
            set: StateSet::from_bits(index / k1),
            last: (tag > 0).then(|| (tag - 1) as usize),
        }
    }
}
