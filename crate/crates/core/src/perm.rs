//! Permutations in one-line notation and their reduced words.
//!
//! `w[p]` is the position at which the strand starting at position `p`
//! ends.  Generators are 0-based: `s_k` swaps positions `k` and `k+1`.
//! A word `[a1, .., am]` means `s_{a1} ∘ .. ∘ s_{am}`, so `am` acts first.

pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

pub fn is_identity(w: &[u8]) -> bool {
    w.iter().enumerate().all(|(p, &x)| p == x as usize)
}

pub fn inverse(w: &[u8]) -> Perm {
    let mut inv = vec![0u8; w.len()];
    for (p, &x) in w.iter().enumerate() {
        inv[x as usize] = p as u8;
    }
    inv
}

/// `a ∘ b` (apply `b` first).
pub fn compose(a: &[u8], b: &[u8]) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn length(w: &[u8]) -> usize {
    let mut l = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                l += 1;
            }
        }
    }
    l
}

/// `s_k ∘ w`.
pub fn left_mul(k: usize, w: &[u8]) -> Perm {
    w.iter()
        .map(|&x| {
            if x as usize == k {
                (k + 1) as u8
            } else if x as usize == k + 1 {
                k as u8
            } else {
                x
            }
        })
        .collect()
}

/// `w ∘ s_k`.
pub fn right_mul(w: &[u8], k: usize) -> Perm {
    let mut r = w.to_vec();
    r.swap(k, k + 1);
    r
}

/// True when `s_k ∘ w` is shorter than `w`.
pub fn is_left_descent(w: &[u8], k: usize) -> bool {
    let inv = inverse(w);
    inv[k] > inv[k + 1]
}

/// The lexicographically smallest reduced word of `w`.
pub fn canonical_word(w: &[u8]) -> Vec<u8> {
    let mut word = Vec::new();
    let mut cur = w.to_vec();
    let n = w.len();
    'outer: loop {
        let inv = inverse(&cur);
        for k in 0..n.saturating_sub(1) {
            if inv[k] > inv[k + 1] {
                word.push(k as u8);
                cur = left_mul(k, &cur);
                continue 'outer;
            }
        }
        break;
    }
    word
}

pub fn from_word(n: usize, word: &[u8]) -> Perm {
    let mut w = identity(n);
    for &k in word.iter().rev() {
        w = left_mul(k as usize, &w);
    }
    w
}

pub fn is_reduced(n: usize, word: &[u8]) -> bool {
    length(&from_word(n, word)) == word.len()
}

/// Moves a sequence along a permutation: `target[w[p]] = source[p]`.
pub fn act_on_seq<T: Clone>(w: &[u8], source: &[T]) -> Vec<T> {
    let mut t = source.to_vec();
    for (p, &x) in w.iter().enumerate() {
        t[x as usize] = source[p].clone();
    }
    t
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

/// Advances to the next permutation in lexicographic order.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Distinct rearrangements of a multiset, in lexicographic order.
pub fn distinct_arrangements<T: Ord + Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut cur = items.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

pub fn sign(w: &[u8]) -> i64 {
    if length(w).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_words_are_reduced_and_minimal() {
        for w in all_perms(4) {
            let word = canonical_word(&w);
            assert_eq!(word.len(), length(&w));
            assert_eq!(from_word(4, &word), w);
        }
        let w0 = vec![2, 1, 0];
        assert_eq!(canonical_word(&w0), vec![0, 1, 0]);
    }

    #[test]
    fn sequences_follow_strands() {
        let w = from_word(3, &[0]);
        assert_eq!(act_on_seq(&w, &['a', 'b', 'c']), vec!['b', 'a', 'c']);
        let w = from_word(3, &[1, 0]);
        // s_0 acts first: abc -> bac, then s_1: bac -> bca
        assert_eq!(act_on_seq(&w, &['a', 'b', 'c']), vec!['b', 'c', 'a']);
    }

    #[test]
    fn arrangements() {
        assert_eq!(distinct_arrangements(&[1, 0, 0]).len(), 3);
        assert_eq!(all_perms(4).len(), 24);
    }
}
