/// Erdős–Gallai test: can `degrees` be realised by a simple graph?
///
/// Runs in `O(n log n)`.
pub fn is_graphical(degrees: &[u64]) -> bool {
    let n = degrees.len() as u64;
    let total: u128 = degrees.iter().map(|&d| d as u128).sum();
    if !total.is_multiple_of(2) {
        return false;
    }
    let mut d = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    if d.first().is_some_and(|&max| max >= n) {
        return false;
    }

    // suffix[i] = sum of d[i..]
    let mut suffix = vec![0u128; d.len() + 1];
    for i in (0..d.len()).rev() {
        suffix[i] = suffix[i + 1] + d[i] as u128;
    }

    let mut prefix = 0u128;
    // count of entries >= k; shrinks as k grows
    let mut at_least = d.len();
    for k in 1..=d.len() {
        prefix += d[k - 1] as u128;
        while at_least > 0 && d[at_least - 1] < k as u64 {
            at_least -= 1;
        }
        // Tail d[k..]: entries >= k contribute k, the rest their value.
        let split = at_least.max(k);
        let capped = (split - k) as u128 * k as u128;
        let rhs = (k as u128) * (k as u128 - 1) + capped + suffix[split];
        if prefix > rhs {
            return false;
        }
    }
    true
}
