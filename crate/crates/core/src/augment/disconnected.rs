//! Cases M1 to M6: graphs judged by their multi-vertex components.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{AugmentError, Rule, Solver};
use crate::blocks::{decompose_counted, BlockDecomposition};
use crate::bounds::{census, classify_m, component_class, ComponentClass, MCase};
use crate::graph::{Edge, Side};
use crate::matching::{binding_edge, matching_profile, MatchingProfile, PAIR_ORDER};

impl Solver {
    pub(super) fn solve_case(&mut self, m_case: MCase, dec: BlockDecomposition) -> Result<(), AugmentError> {
        match m_case {
            MCase::M1 => self.single_component(dec),
            MCase::M2 => {
                self.round_robin(&dec);
                Ok(())
            }
            MCase::M3 => self.join_components(&dec),
            MCase::M4 => {
                self.edge_and_vertices(&dec);
                Ok(())
            }
            MCase::M5 => {
                self.edge_to_block(&dec);
                Ok(())
            }
            MCase::M6 => Ok(()),
        }
    }

    fn edge(&self, u: usize, v: usize) -> Edge {
        self.g.edge_between(u, v).expect("endpoints on opposite sides")
    }

    fn components_of(dec: &BlockDecomposition, class: &[ComponentClass]) -> Vec<usize> {
        (0..dec.components.count())
            .filter(|&c| class.contains(&component_class(dec, c)))
            .collect()
    }

    fn isolated_on(&self, dec: &BlockDecomposition, side: Side) -> Option<usize> {
        Self::components_of(dec, &[ComponentClass::IsolatedVertex])
            .into_iter()
            .map(|c| dec.components.members[c][0])
            .find(|&v| self.g.side(v) == side)
    }

    fn lowest_on(&self, members: &[usize], side: Side) -> Option<usize> {
        members.iter().copied().find(|&v| self.g.side(v) == side)
    }

    /// One non-block component: solve it on its own, or close a star.
    fn single_component(&mut self, dec: BlockDecomposition) -> Result<(), AugmentError> {
        let comp = Self::components_of(&dec, &[ComponentClass::Other])[0];
        let members = dec.components.members[comp].clone();
        let na = members.iter().filter(|&&v| self.g.side(v) == Side::A).count();
        let nb = members.len() - na;
        if na >= 2 && nb >= 2 && members.len() == self.g.vertex_count() {
            return self.solve_connected(MCase::M1, Some(dec));
        }
        let dec = &dec;
        if na >= 2 && nb >= 2 {
            let mut sub = Solver::new(self.g.induced(&members), self.opts);
            sub.solve_connected(MCase::M1, None)?;
            self.ops.absorb(&sub.ops);
            for t in sub.trace {
                let e = Edge {
                    a: members[t.edge.a],
                    b: members[t.edge.b],
                };
                self.push(e, t.label.m_case, t.label.s_case, t.rule, t.pivot.map(|p| members[p]));
            }
            return Ok(());
        }
        let center_side = if na == 1 { Side::A } else { Side::B };
        let center = self.lowest_on(&members, center_side).expect("star center");
        let leaves: Vec<usize> = members.iter().copied().filter(|&v| v != center).collect();
        if let Some(w) = self.isolated_on(dec, center_side) {
            for &v in &leaves {
                self.push(self.edge(w, v), MCase::M1, None, Rule::StarHub, None);
            }
            return Ok(());
        }
        let block = *Self::components_of(dec, &[ComponentClass::Block])
            .first()
            .ok_or(AugmentError::Internal("star without a partner block"))?;
        let mut hubs = dec.components.members[block]
            .iter()
            .copied()
            .filter(|&v| self.g.side(v) == center_side);
        let (w1, w2) = (hubs.next().expect("block side"), hubs.next().expect("block side"));
        self.push(self.edge(w1, leaves[0]), MCase::M1, None, Rule::StarSplit, None);
        for &v in &leaves[1..] {
            self.push(self.edge(w2, v), MCase::M1, None, Rule::StarSplit, None);
        }
        Ok(())
    }

    /// No legal pair exists: every pendant vertex of one component joins a
    /// vertex of the next component in cyclic order.
    fn round_robin(&mut self, dec: &BlockDecomposition) {
        let comps = Self::components_of(dec, &[ComponentClass::Other, ComponentClass::IsolatedEdge]);
        let k = comps.len();
        let mut targets = Vec::with_capacity(k);
        for &c in &comps {
            let pendant_side = dec
                .pendants_of_component(c)
                .next()
                .map(|p| if p.rep_a().is_some() { Side::A } else { Side::B })
                .expect("non-block component has pendants");
            let y = self
                .lowest_on(&dec.components.members[c], pendant_side.opposite())
                .expect("component has both sides");
            targets.push(y);
        }
        let mut by_comp = vec![Vec::new(); dec.components.count()];
        for p in &dec.pendant_blocks {
            by_comp[p.component].push(p.rep_a().or(p.rep_b()).expect("pendant vertex"));
        }
        for (i, &c) in comps.iter().enumerate() {
            let y = targets[(i + 1) % k];
            for &x in &by_comp[c] {
                self.push(self.edge(x, y), MCase::M2, None, Rule::RoundRobin, None);
            }
        }
    }

    /// Joins components through legal pairs that keep the rest optimally
    /// matchable, until one non-block component is left or no legal pair
    /// remains, then finishes as M1 or M2.
    fn join_components(&mut self, dec: &BlockDecomposition) -> Result<(), AugmentError> {
        let pend = &dec.pendant_blocks;
        let comps = Self::components_of(dec, &[ComponentClass::Other, ComponentClass::IsolatedEdge]);
        let mut of_comp = vec![Vec::new(); dec.components.count()];
        for (i, p) in pend.iter().enumerate() {
            of_comp[p.component].push(i);
        }
        let mut w1: [BTreeSet<usize>; 3] = Default::default();
        let mut w2: [BTreeSet<usize>; 3] = Default::default();
        let acc = comps[0];
        for (i, p) in pend.iter().enumerate() {
            let set = if p.component == acc { &mut w1 } else { &mut w2 };
            set[p.ptype.index()].insert(i);
        }
        let mut live = comps.len();
        let count = |w: &[BTreeSet<usize>; 3], t: usize| w[t].len();
        while live >= 2 {
            let all = MatchingProfile::from_counts(
                count(&w1, 0) + count(&w2, 0),
                count(&w1, 1) + count(&w2, 1),
                count(&w1, 2) + count(&w2, 2),
            );
            if all.m == 0 {
                break;
            }
            let (t1, t2) = PAIR_ORDER
                .into_iter()
                .find(|&(t1, t2)| {
                    !w1[t1.index()].is_empty() && !w2[t2.index()].is_empty() && all.drops_by_one(t1, t2)
                })
                .ok_or(AugmentError::Internal("no joining pair"))?;
            let i1 = *w1[t1.index()].first().expect("nonempty");
            let i2 = *w2[t2.index()].first().expect("nonempty");
            let (p1, p2) = (&pend[i1], &pend[i2]);
            let e = binding_edge((p1.rep_a(), p1.rep_b()), (p2.rep_a(), p2.rep_b()), p1.id < p2.id)
                .expect("legal pair");
            self.push(e, MCase::M3, None, Rule::JoinComponents, None);
            self.ops.reductions += 1;
            w1[t1.index()].remove(&i1);
            w2[t2.index()].remove(&i2);
            for &j in &of_comp[p2.component] {
                if j != i2 {
                    let t = pend[j].ptype.index();
                    w2[t].remove(&j);
                    w1[t].insert(j);
                }
            }
            live -= 1;
        }
        self.sync();
        let dec = decompose_counted(&self.g, &mut self.ops);
        self.ops.recomputes += 1;
        match classify_m(&census(&dec), &matching_profile(&dec.pendant_blocks)) {
            MCase::M1 => self.single_component(dec),
            MCase::M2 => {
                self.round_robin(&dec);
                Ok(())
            }
            _ => Err(AugmentError::Internal("joining left an unexpected case")),
        }
    }

    /// An isolated edge `rc` plus isolated vertices `r'`, `c'`.
    fn edge_and_vertices(&mut self, dec: &BlockDecomposition) {
        let comp = Self::components_of(dec, &[ComponentClass::IsolatedEdge])[0];
        let m = &dec.components.members[comp];
        let (r, c) = (self.lowest_on(m, Side::A).unwrap(), self.lowest_on(m, Side::B).unwrap());
        let r2 = self.isolated_on(dec, Side::A).expect("second A vertex");
        let c2 = self.isolated_on(dec, Side::B).expect("second B vertex");
        for (u, v) in [(r, c2), (r2, c), (r2, c2)] {
            self.push(Edge { a: u, b: v }, MCase::M4, None, Rule::EdgeAndVertices, None);
        }
    }

    /// An isolated edge `r'c'` hung onto a block through its `r`, `c`.
    fn edge_to_block(&mut self, dec: &BlockDecomposition) {
        let edge_comp = Self::components_of(dec, &[ComponentClass::IsolatedEdge])[0];
        let block_comp = Self::components_of(dec, &[ComponentClass::Block])[0];
        let (em, bm) = (&dec.components.members[edge_comp], &dec.components.members[block_comp]);
        let (r2, c2) = (self.lowest_on(em, Side::A).unwrap(), self.lowest_on(em, Side::B).unwrap());
        let (r, c) = (self.lowest_on(bm, Side::A).unwrap(), self.lowest_on(bm, Side::B).unwrap());
        for (u, v) in [(r, c2), (r2, c)] {
            self.push(Edge { a: u, b: v }, MCase::M5, None, Rule::EdgeToBlock, None);
        }
    }
}
