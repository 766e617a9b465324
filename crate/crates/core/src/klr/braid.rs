//! Paths of braid and commutation moves between reduced words.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// `s_a s_b -> s_b s_a` at position `p`, `|a - b| > 1`.
    Commute(usize),
    /// `s_a s_b s_a -> s_b s_a s_b` at position `p`, `|a - b| = 1`.
    Braid(usize),
}

pub fn apply(word: &mut [u8], mv: Move) {
    match mv {
        Move::Commute(p) => word.swap(p, p + 1),
        Move::Braid(p) => {
            let (a, b) = (word[p], word[p + 1]);
            word[p] = b;
            word[p + 1] = a;
            word[p + 2] = b;
        }
    }
}

fn neighbours(word: &[u8]) -> Vec<(Move, Vec<u8>)> {
    let mut out = Vec::new();
    for p in 0..word.len().saturating_sub(1) {
        if word[p].abs_diff(word[p + 1]) > 1 {
            let mut w = word.to_vec();
            apply(&mut w, Move::Commute(p));
            out.push((Move::Commute(p), w));
        }
        if p + 2 < word.len() && word[p] == word[p + 2] && word[p].abs_diff(word[p + 1]) == 1 {
            let mut w = word.to_vec();
            apply(&mut w, Move::Braid(p));
            out.push((Move::Braid(p), w));
        }
    }
    out
}

type PathCache = Mutex<HashMap<(Vec<u8>, Vec<u8>), Arc<Vec<Move>>>>;

fn cache() -> &'static PathCache {
    static CACHE: OnceLock<PathCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// A shortest sequence of moves turning `from` into `goal`.
///
/// Both must be reduced words of the same permutation (Matsumoto).
pub fn braid_path(from: &[u8], goal: &[u8]) -> Arc<Vec<Move>> {
    let key = (from.to_vec(), goal.to_vec());
    if let Some(p) = cache().lock().unwrap().get(&key) {
        return p.clone();
    }
    let mut prev: HashMap<Vec<u8>, (Vec<u8>, Move)> = HashMap::new();
    let mut queue = VecDeque::new();
    queue.push_back(from.to_vec());
    let mut seen = std::collections::HashSet::new();
    seen.insert(from.to_vec());
    let mut found = from == goal;
    while let Some(w) = queue.pop_front() {
        if found {
            break;
        }
        for (mv, next) in neighbours(&w) {
            if seen.insert(next.clone()) {
                prev.insert(next.clone(), (w.clone(), mv));
                if next == goal {
                    found = true;
                    break;
                }
                queue.push_back(next);
            }
        }
    }
    assert!(found, "no braid path from {:?} to {:?}", from, goal);
    let mut moves = Vec::new();
    let mut cur = goal.to_vec();
    while cur != from {
        let (p, mv) = prev[&cur].clone();
        moves.push(mv);
        cur = p;
    }
    moves.reverse();
    let path = Arc::new(moves);
    cache().lock().unwrap().insert(key, path.clone());
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_perms, canonical_word, from_word};

    #[test]
    fn paths_connect_reduced_words() {
        let w0 = vec![3u8, 2, 1, 0];
        let canon = canonical_word(&w0);
        let other = vec![2u8, 1, 0, 2, 1, 2];
        assert_eq!(from_word(4, &other), w0);
        let path = braid_path(&other, &canon);
        let mut w = other.clone();
        for mv in path.iter() {
            apply(&mut w, *mv);
            assert_eq!(from_word(4, &w), w0);
        }
        assert_eq!(w, canon);
    }

    #[test]
    fn every_prefix_form_reaches_canonical() {
        for w in all_perms(4) {
            let canon = canonical_word(&w);
            for k in 0..3 {
                if crate::perm::is_left_descent(&w, k) {
                    let sw = crate::perm::left_mul(k, &w);
                    let mut word = vec![k as u8];
                    word.extend(canonical_word(&sw));
                    let mut cur = word.clone();
                    for mv in braid_path(&word, &canon).iter() {
                        apply(&mut cur, *mv);
                    }
                    assert_eq!(cur, canon);
                }
            }
        }
    }
}
