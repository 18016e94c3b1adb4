use std::collections::VecDeque;

use crate::automata::graph::{coreach_within, covering_cycle, following_cycle, reach_within, shortest_path};
use crate::automata::{trim_with_map, Letter, Nfa, StateId, Trimmed, Word};
use crate::bitset::{BitSet, LetterSet};
use crate::error::Result;
use crate::separability::anchor::{maximal_common_cycle_alphabet, PumpAnchor};
use crate::separability::pattern::{BlockPath, PatternWitness, PumpBlock};

/// Product of the trimmed automata with two kinds of edges: synchronized
/// letter edges `(p, q) -a-> (p′, q′)`, and block edges through a
/// [`PumpAnchor`] `(r_a, r_b, Γ)` from every `(p, q)` with `p ⇝ r_a` and
/// `q ⇝ r_b` inside `Γ` to every `(p″, q″)` with `r_a ⇝ p″` and `r_b ⇝ q″`
/// inside `Γ`.
///
/// Block edges are stored factorized per anchor. All state ids here refer to
/// the trimmed automata.
#[derive(Clone, Debug)]
pub struct BlockProduct {
    a: Trimmed,
    b: Trimmed,
    anchors: Vec<AnchorHub>,
}

#[derive(Clone, Debug)]
struct AnchorHub {
    anchor: PumpAnchor,
    into_a: BitSet,
    into_b: BitSet,
    out_a: BitSet,
    out_b: BitSet,
}

impl AnchorHub {
    fn accepts_from(&self, p: StateId, q: StateId) -> bool {
        self.into_a.contains(p) && self.into_b.contains(q)
    }
}

/// Length of the shortest power of `cycle` that contains `target^4`, an
/// estimate of how fast towers grow when the two sides pump these cycles.
fn pumping_cost(target: &[Letter], cycle: &[Letter]) -> usize {
    let mut passes = 0;
    let mut pos = 0;
    let word: Vec<Letter> = target.repeat(4);
    while pos < word.len() {
        let before = pos;
        for &c in cycle {
            if pos < word.len() && word[pos] == c {
                pos += 1;
            }
        }
        if pos == before {
            return usize::MAX;
        }
        passes += 1;
    }
    passes * cycle.len()
}

/// A node of the product: a pair of trimmed states.
pub type PairNode = (StateId, StateId);

/// Builds the block product after trimming both automata.
pub fn build_block_product(a: &Nfa, b: &Nfa) -> Result<BlockProduct> {
    a.same_alphabet(b)?;
    let ta = trim_with_map(a);
    let tb = trim_with_map(b);
    let mut anchors = Vec::new();
    for r_a in ta.nfa.states() {
        for r_b in tb.nfa.states() {
            let gamma = maximal_common_cycle_alphabet(&ta.nfa, &tb.nfa, r_a, r_b)?;
            if gamma.is_empty() {
                continue;
            }
            anchors.push(AnchorHub {
                into_a: coreach_within(&ta.nfa, &gamma, r_a),
                into_b: coreach_within(&tb.nfa, &gamma, r_b),
                out_a: reach_within(&ta.nfa, &gamma, r_a),
                out_b: reach_within(&tb.nfa, &gamma, r_b),
                anchor: PumpAnchor { r_a, r_b, gamma },
            });
        }
    }
    Ok(BlockProduct { a: ta, b: tb, anchors })
}

#[derive(Clone, Copy)]
enum Via {
    Start,
    Letter(usize, Letter),
    Hub(usize),
}

enum Step {
    Letter(Letter),
    Block { hub: usize, from: PairNode, to: PairNode },
}

impl BlockProduct {
    pub fn trimmed_a(&self) -> &Trimmed {
        &self.a
    }

    pub fn trimmed_b(&self) -> &Trimmed {
        &self.b
    }

    /// Anchors with a nonempty common cycle alphabet, over trimmed states.
    pub fn anchors(&self) -> impl Iterator<Item = &PumpAnchor> {
        self.anchors.iter().map(|h| &h.anchor)
    }

    pub fn num_nodes(&self) -> usize {
        self.a.nfa.num_states() * self.b.nfa.num_states()
    }

    pub fn letter_edges(&self) -> impl Iterator<Item = (PairNode, Letter, PairNode)> + '_ {
        let (a, b) = (&self.a.nfa, &self.b.nfa);
        a.states().flat_map(move |p| {
            b.states().flat_map(move |q| {
                a.alphabet().letters().flat_map(move |l| {
                    a.successors(p, l)
                        .iter()
                        .flat_map(move |&p2| b.successors(q, l).iter().map(move |&q2| ((p, q), l, (p2, q2))))
                })
            })
        })
    }

    /// Expanded block edges `(from, anchor index, to)`; quadratic in the number
    /// of nodes per anchor.
    pub fn block_edges(&self) -> impl Iterator<Item = (PairNode, usize, PairNode)> + '_ {
        self.anchors.iter().enumerate().flat_map(|(i, h)| {
            h.into_a.iter().flat_map(move |p| {
                h.into_b.iter().flat_map(move |q| {
                    h.out_a
                        .iter()
                        .flat_map(move |p2| h.out_b.iter().map(move |q2| ((p, q), i, (p2, q2))))
                })
            })
        })
    }

    pub fn anchor(&self, i: usize) -> &PumpAnchor {
        &self.anchors[i].anchor
    }

    fn node(&self, (p, q): PairNode) -> usize {
        p * self.b.nfa.num_states() + q
    }

    fn pair(&self, id: usize) -> PairNode {
        let nb = self.b.nfa.num_states();
        (id / nb, id % nb)
    }

    /// Breadth-first search from the initial pairs to an accepting pair,
    /// optionally crossing block edges. Returns the pattern witness, mapped
    /// back to the states of the original automata.
    pub fn find_pattern(&self, use_blocks: bool) -> Option<PatternWitness> {
        let (a, b) = (&self.a.nfa, &self.b.nfa);
        let n = self.num_nodes();
        let hubs = if use_blocks { self.anchors.len() } else { 0 };
        let mut node_via: Vec<Option<Via>> = vec![None; n];
        let mut hub_via: Vec<Option<usize>> = vec![None; hubs];
        // queue entries: Ok(node) or Err(hub)
        let mut queue: VecDeque<Result<usize, usize>> = VecDeque::new();
        for &p in a.initial() {
            for &q in b.initial() {
                let id = self.node((p, q));
                if node_via[id].is_none() {
                    node_via[id] = Some(Via::Start);
                    queue.push_back(Ok(id));
                }
            }
        }
        while let Some(item) = queue.pop_front() {
            match item {
                Ok(id) => {
                    let (p, q) = self.pair(id);
                    if a.is_accepting(p) && b.is_accepting(q) {
                        return Some(self.witness(self.trace(id, &node_via, &hub_via)));
                    }
                    for l in a.alphabet().letters() {
                        for &p2 in a.successors(p, l) {
                            for &q2 in b.successors(q, l) {
                                let next = self.node((p2, q2));
                                if node_via[next].is_none() {
                                    node_via[next] = Some(Via::Letter(id, l));
                                    queue.push_back(Ok(next));
                                }
                            }
                        }
                    }
                    for (h, via) in hub_via.iter_mut().enumerate() {
                        if via.is_none() && self.anchors[h].accepts_from(p, q) {
                            *via = Some(id);
                            queue.push_back(Err(h));
                        }
                    }
                }
                Err(h) => {
                    let hub = &self.anchors[h];
                    for p2 in hub.out_a.iter() {
                        for q2 in hub.out_b.iter() {
                            let next = self.node((p2, q2));
                            if node_via[next].is_none() {
                                node_via[next] = Some(Via::Hub(h));
                                queue.push_back(Ok(next));
                            }
                        }
                    }
                }
            }
        }
        None
    }

    fn trace(
        &self,
        end: usize,
        node_via: &[Option<Via>],
        hub_via: &[Option<usize>],
    ) -> (PairNode, Vec<Step>, PairNode) {
        let mut steps = Vec::new();
        let mut cur = end;
        loop {
            match node_via[cur].expect("visited") {
                Via::Start => break,
                Via::Letter(prev, l) => {
                    steps.push(Step::Letter(l));
                    cur = prev;
                }
                Via::Hub(h) => {
                    let prev = hub_via[h].expect("hub visited");
                    steps.push(Step::Block {
                        hub: h,
                        from: self.pair(prev),
                        to: self.pair(cur),
                    });
                    cur = prev;
                }
            }
        }
        steps.reverse();
        (self.pair(cur), steps, self.pair(end))
    }

    fn block_path(
        &self,
        trimmed: &Trimmed,
        anchor: StateId,
        gamma: &LetterSet,
        cycle: Word,
        (entry, exit): PairNode,
    ) -> BlockPath {
        let nfa = &trimmed.nfa;
        BlockPath {
            entry: trimmed.origin[entry],
            lead_in: shortest_path(nfa, gamma, entry, anchor, None).expect("entry reaches anchor"),
            cycle,
            lead_out: shortest_path(nfa, gamma, anchor, exit, None).expect("anchor reaches exit"),
            exit: trimmed.origin[exit],
        }
    }

    fn witness(&self, (start, steps, end): (PairNode, Vec<Step>, PairNode)) -> PatternWitness {
        let mut head: Word = Vec::new();
        let mut blocks: Vec<PumpBlock> = Vec::new();
        for step in steps {
            match step {
                Step::Letter(l) => match blocks.last_mut() {
                    Some(block) => block.tail.push(l),
                    None => head.push(l),
                },
                Step::Block { hub, from, to } => {
                    let anchor = &self.anchors[hub].anchor;
                    let gamma = &anchor.gamma;
                    let cycle_a = covering_cycle(&self.a.nfa, gamma, anchor.r_a).expect("anchor lies on a gamma cycle");
                    let cycle_b = [
                        covering_cycle(&self.b.nfa, gamma, anchor.r_b),
                        following_cycle(&self.b.nfa, gamma, anchor.r_b, &cycle_a),
                    ]
                    .into_iter()
                    .flatten()
                    .min_by_key(|c| pumping_cost(&cycle_a, c))
                    .expect("anchor lies on a gamma cycle");
                    blocks.push(PumpBlock {
                        a: self.block_path(&self.a, anchor.r_a, gamma, cycle_a, (from.0, to.0)),
                        b: self.block_path(&self.b, anchor.r_b, gamma, cycle_b, (from.1, to.1)),
                        anchor: PumpAnchor {
                            r_a: self.a.origin[anchor.r_a],
                            r_b: self.b.origin[anchor.r_b],
                            gamma: anchor.gamma.clone(),
                        },
                        tail: Vec::new(),
                    });
                }
            }
        }
        PatternWitness {
            initial: (self.a.origin[start.0], self.b.origin[start.1]),
            head,
            blocks,
            accepting: (self.a.origin[end.0], self.b.origin[end.1]),
        }
    }
}
