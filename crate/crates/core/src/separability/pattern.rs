use crate::automata::{letters_of, Nfa, StateId, Word};
use crate::bitset::LetterSet;
use crate::error::{Error, Result};
use crate::oracles::subsequence;
use crate::separability::anchor::PumpAnchor;
use crate::separability::tower::{Side, Tower};

/// How one automaton traverses a pumping block: from `entry` to the anchor
/// state over `lead_in`, around the anchor over `cycle` (any number of times),
/// then to `exit` over `lead_out`. All three words use only letters of the
/// block's alphabet, and `cycle` uses all of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPath {
    pub entry: StateId,
    pub lead_in: Word,
    pub cycle: Word,
    pub lead_out: Word,
    pub exit: StateId,
}

impl BlockPath {
    /// `lead_in · cycle^n · lead_out`.
    pub fn expand(&self, n: usize) -> Word {
        let mut w = self.lead_in.clone();
        for _ in 0..n {
            w.extend_from_slice(&self.cycle);
        }
        w.extend_from_slice(&self.lead_out);
        w
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PumpBlock {
    pub anchor: PumpAnchor,
    pub a: BlockPath,
    pub b: BlockPath,
    /// Common word read after the block.
    pub tail: Word,
}

impl PumpBlock {
    pub fn gamma(&self) -> &LetterSet {
        &self.anchor.gamma
    }

    pub fn path(&self, side: Side) -> &BlockPath {
        side.pick(&self.a, &self.b)
    }
}

/// Generator of arbitrarily high towers: `head`, then for each block a pumped
/// segment followed by the block's `tail`. The segment words differ between the
/// two automata but share their alphabet. With no blocks, `head` is a word of
/// both languages.
///
/// State ids refer to the automata the witness was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternWitness {
    pub initial: (StateId, StateId),
    pub head: Word,
    pub blocks: Vec<PumpBlock>,
    pub accepting: (StateId, StateId),
}

fn pair(side: Side, p: (StateId, StateId)) -> StateId {
    match side {
        Side::A => p.0,
        Side::B => p.1,
    }
}

impl PatternWitness {
    /// Number of pumping blocks.
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    /// The word read on `side` with block `i` pumped `pumps[i]` times.
    pub fn expand(&self, side: Side, pumps: &[usize]) -> Word {
        assert_eq!(pumps.len(), self.blocks.len());
        let mut w = self.head.clone();
        for (block, &n) in self.blocks.iter().zip(pumps) {
            w.extend(block.path(side).expand(n));
            w.extend_from_slice(&block.tail);
        }
        w
    }

    /// Letter conditions that make every pumped segment contain every shorter
    /// word over the block alphabet.
    fn check_alphabets(&self) -> Result<()> {
        for (i, block) in self.blocks.iter().enumerate() {
            let gamma = block.gamma();
            if gamma.is_empty() {
                return Err(Error::InvalidWitness(format!("block {i} has an empty alphabet")));
            }
            for side in [Side::A, Side::B] {
                let path = block.path(side);
                if &letters_of(&path.cycle) != gamma {
                    return Err(Error::InvalidWitness(format!(
                        "block {i}: cycle on side {side:?} does not use exactly the block alphabet"
                    )));
                }
                if !letters_of(&path.lead_in)
                    .union(&letters_of(&path.lead_out))
                    .is_subset(gamma)
                {
                    return Err(Error::InvalidWitness(format!(
                        "block {i}: connector on side {side:?} leaves the block alphabet"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Replays the recorded paths in both automata. A valid witness makes
    /// every pumping of every block accepted on both sides.
    pub fn validate(&self, a: &Nfa, b: &Nfa) -> Result<()> {
        self.check_alphabets()?;
        for side in [Side::A, Side::B] {
            let nfa = side.pick(a, b);
            let fail = |what: String| Err(Error::InvalidWitness(format!("side {side:?}: {what}")));
            let start = pair(side, self.initial);
            if !nfa.initial().contains(&start) {
                return fail("start state is not initial".into());
            }
            let mut cur = start;
            let mut read = &self.head;
            for (i, block) in self.blocks.iter().enumerate() {
                let path = block.path(side);
                let anchor = pair(side, (block.anchor.r_a, block.anchor.r_b));
                if !nfa.read_from(cur, read).contains(path.entry) {
                    return fail(format!("cannot reach entry of block {i}"));
                }
                if !nfa.read_from(path.entry, &path.lead_in).contains(anchor) {
                    return fail(format!("block {i}: lead-in does not reach the anchor"));
                }
                if !nfa.read_from(anchor, &path.cycle).contains(anchor) {
                    return fail(format!("block {i}: cycle does not return to the anchor"));
                }
                if !nfa.read_from(anchor, &path.lead_out).contains(path.exit) {
                    return fail(format!("block {i}: lead-out does not reach the exit"));
                }
                cur = path.exit;
                read = &block.tail;
            }
            let end = pair(side, self.accepting);
            if !nfa.read_from(cur, read).contains(end) || !nfa.is_accepting(end) {
                return fail("does not end in the accepting state".into());
            }
        }
        Ok(())
    }
}

/// Greedily embeds `word[from..]` into `text`; returns the new position.
fn embed(word: &[usize], from: usize, text: &[usize]) -> usize {
    let mut i = from;
    for &c in text {
        if i < word.len() && word[i] == c {
            i += 1;
        }
    }
    i
}

/// Smallest `n` with `prev ≼ path.expand(n)`; at most `|prev|` because the
/// cycle holds every letter of the block alphabet.
///
/// Greedy embedding is leftmost, so after `lead_in · cycle^j` it has consumed
/// the longest possible prefix of `prev`, and `n = j` works iff the rest
/// embeds into `lead_out`.
fn least_pump(path: &BlockPath, prev: &[usize]) -> usize {
    let mut pos = embed(prev, 0, &path.lead_in);
    for n in 0..=prev.len() {
        if subsequence(&prev[pos..], &path.lead_out) {
            return n;
        }
        pos = embed(prev, pos, &path.cycle);
    }
    unreachable!("pumping |prev| times embeds any word over the block alphabet")
}

/// A tower of height `h` generated by the pattern, starting in `L(A)`.
///
/// The first word pumps nothing; each later level pumps every block just
/// enough for the previous level's block word to embed into it. Heads and
/// tails are shared, so embedding block by block embeds the whole word.
pub fn towers_from_pattern(witness: &PatternWitness, h: usize) -> Result<Tower> {
    if h == 0 {
        return Err(Error::InvalidWitness("tower height must be positive".into()));
    }
    witness.check_alphabets()?;
    let start = Side::A;
    let mut pumps = vec![0; witness.k()];
    let mut words = vec![witness.expand(start, &pumps)];
    for level in 1..h {
        let (prev_side, side) = (start.at_level(level - 1), start.at_level(level));
        pumps = witness
            .blocks
            .iter()
            .zip(&pumps)
            .map(|(block, &n)| least_pump(block.path(side), &block.path(prev_side).expand(n)))
            .collect();
        words.push(witness.expand(side, &pumps));
    }
    Ok(Tower {
        words,
        start_side: start,
    })
}
