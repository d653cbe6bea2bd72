//! Stable counting sorts on integer keys.

use alloc::vec;
use alloc::vec::Vec;

/// Stable sort of `items` by `key`, all keys below `range`. Linear in
/// `items.len() + range`.
pub(crate) fn counting_sort<T: Copy>(items: &[T], range: usize, key: impl Fn(&T) -> usize) -> Vec<T> {
    let mut start = vec![0usize; range + 1];
    for x in items {
        start[key(x) + 1] += 1;
    }
    for i in 0..range {
        start[i + 1] += start[i];
    }
    let mut out = items.to_vec();
    for x in items {
        let k = key(x);
        out[start[k]] = *x;
        start[k] += 1;
    }
    out
}

/// Sorts each list of vertices below `n`.
pub(crate) fn sort_lists(lists: &mut [Vec<usize>], n: usize) {
    let mut pairs = Vec::with_capacity(lists.iter().map(Vec::len).sum());
    for (i, list) in lists.iter_mut().enumerate() {
        pairs.extend(list.drain(..).map(|v| (v, i)));
    }
    for (v, i) in counting_sort(&pairs, n, |p| p.0) {
        lists[i].push(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_by_key() {
        let items = [(3, 'a'), (1, 'b'), (3, 'c'), (0, 'd'), (1, 'e')];
        let out = counting_sort(&items, 4, |p| p.0);
        assert_eq!(out, vec![(0, 'd'), (1, 'b'), (1, 'e'), (3, 'a'), (3, 'c')]);
    }

    #[test]
    fn lists() {
        let mut lists = vec![vec![4, 0, 2], vec![], vec![3, 1]];
        sort_lists(&mut lists, 5);
        assert_eq!(lists, vec![vec![0, 2, 4], vec![], vec![1, 3]]);
    }
}
