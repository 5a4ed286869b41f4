use std::collections::HashMap;

/// Node tables up to this many entries are kept dense.
const DENSE_LIMIT: u128 = 1 << 22;

/// Per-node labels for a search over an implicit graph of `u64` node ids.
pub(crate) enum NodeMap<T> {
    Dense(Vec<Option<T>>),
    Sparse(HashMap<u64, T>),
}

impl<T: Copy> NodeMap<T> {
    pub(crate) fn for_node_count(count: u128) -> Self {
        if count <= DENSE_LIMIT {
            NodeMap::Dense(vec![None; count as usize])
        } else {
            NodeMap::Sparse(HashMap::new())
        }
    }

    #[inline]
    pub(crate) fn get(&self, node: u64) -> Option<T> {
        match self {
            NodeMap::Dense(v) => v[node as usize],
            NodeMap::Sparse(m) => m.get(&node).copied(),
        }
    }

    #[inline]
    pub(crate) fn insert(&mut self, node: u64, value: T) {
        match self {
            NodeMap::Dense(v) => v[node as usize] = Some(value),
            NodeMap::Sparse(m) => {
                m.insert(node, value);
            }
        }
    }
}

/// Number of subsets of an `n`-state automaton, times `tags`.
pub(crate) fn node_count(n: usize, tags: usize) -> u128 {
    (1u128 << n) * tags as u128
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_and_sparse_agree() {
        let mut d: NodeMap<u32> = NodeMap::for_node_count(16);
        let mut s: NodeMap<u32> = NodeMap::for_node_count(1 << 40);
        assert!(matches!(d, NodeMap::Dense(_)));
        assert!(matches!(s, NodeMap::Sparse(_)));
        for (i, v) in [(3u64, 7u32), (15, 1), (3, 2)] {
            d.insert(i, v);
            s.insert(i, v);
        }
        for i in 0..16 {
            assert_eq!(d.get(i), s.get(i));
        }
        assert_eq!(d.get(3), Some(2));
    }
}
