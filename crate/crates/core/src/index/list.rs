//! Doubly linked lists threaded through index arrays.

use alloc::vec::Vec;

pub const NIL: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ListHead {
    pub head: u32,
    pub tail: u32,
    pub len: u32,
}

impl ListHead {
    pub const EMPTY: ListHead = ListHead {
        head: NIL,
        tail: NIL,
        len: 0,
    };

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
}

impl Default for ListHead {
    fn default() -> Self {
        Self::EMPTY
    }
}

/// Link fields for one family of lists. Each element is on at most one list
/// of the family at a time.
#[derive(Clone, Debug, Default)]
pub struct Links {
    prev: Vec<u32>,
    next: Vec<u32>,
    pub linked: u64,
    pub unlinked: u64,
}

impl Links {
    pub fn with_len(n: usize) -> Self {
        Links {
            prev: alloc::vec![NIL; n],
            next: alloc::vec![NIL; n],
            linked: 0,
            unlinked: 0,
        }
    }

    pub fn reserve(&mut self, extra: usize) {
        self.prev.reserve(extra);
        self.next.reserve(extra);
    }

    pub fn grow(&mut self, n: usize) {
        if self.prev.len() < n {
            self.prev.resize(n, NIL);
            self.next.resize(n, NIL);
        }
    }

    pub fn next(&self, x: u32) -> u32 {
        self.next[x as usize]
    }

    pub fn push_back(&mut self, list: &mut ListHead, x: u32) {
        self.linked += 1;
        self.prev[x as usize] = list.tail;
        self.next[x as usize] = NIL;
        if list.tail == NIL {
            list.head = x;
        } else {
            self.next[list.tail as usize] = x;
        }
        list.tail = x;
        list.len += 1;
    }

    /// Inserts `x` right before `at`, which must be on `list`.
    pub fn insert_before(&mut self, list: &mut ListHead, at: u32, x: u32) {
        self.linked += 1;
        let p = self.prev[at as usize];
        self.prev[x as usize] = p;
        self.next[x as usize] = at;
        self.prev[at as usize] = x;
        if p == NIL {
            list.head = x;
        } else {
            self.next[p as usize] = x;
        }
        list.len += 1;
    }

    pub fn unlink(&mut self, list: &mut ListHead, x: u32) {
        self.unlinked += 1;
        let (p, n) = (self.prev[x as usize], self.next[x as usize]);
        if p == NIL {
            list.head = n;
        } else {
            self.next[p as usize] = n;
        }
        if n == NIL {
            list.tail = p;
        } else {
            self.prev[n as usize] = p;
        }
        self.prev[x as usize] = NIL;
        self.next[x as usize] = NIL;
        list.len -= 1;
    }

    /// Moves every element of `src` to the end of `dst` in constant time.
    pub fn append(&mut self, dst: &mut ListHead, src: &mut ListHead) {
        if src.is_empty() {
            return;
        }
        self.linked += 1;
        if dst.is_empty() {
            *dst = *src;
        } else {
            self.next[dst.tail as usize] = src.head;
            self.prev[src.head as usize] = dst.tail;
            dst.tail = src.tail;
            dst.len += src.len;
        }
        *src = ListHead::EMPTY;
    }

    pub fn iter<'a>(&'a self, list: &ListHead) -> impl Iterator<Item = u32> + 'a {
        let mut at = list.head;
        core::iter::from_fn(move || {
            if at == NIL {
                return None;
            }
            let x = at;
            at = self.next[x as usize];
            Some(x)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn basic_operations() {
        let mut links = Links::with_len(6);
        let mut l1 = ListHead::EMPTY;
        let mut l2 = ListHead::EMPTY;
        for x in 0..3 {
            links.push_back(&mut l1, x);
        }
        links.push_back(&mut l2, 3);
        links.insert_before(&mut l2, 3, 4);
        links.unlink(&mut l1, 1);
        assert_eq!(links.iter(&l1).collect::<Vec<_>>(), vec![0, 2]);
        links.append(&mut l1, &mut l2);
        assert!(l2.is_empty());
        assert_eq!(links.iter(&l1).collect::<Vec<_>>(), vec![0, 2, 4, 3]);
        assert_eq!(l1.len, 4);
        links.unlink(&mut l1, 3);
        links.unlink(&mut l1, 0);
        assert_eq!((l1.head, l1.tail, l1.len), (2, 4, 2));
    }
}
