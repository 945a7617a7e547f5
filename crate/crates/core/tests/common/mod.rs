//! Independent oracles shared by the integration suites. These deliberately
//! avoid the library's own enumeration and polynomial code.

/// Bell numbers by the triangle recurrence: each row starts with the last
/// entry of the previous row, and every other entry is the sum of its left
/// neighbor and the entry above that neighbor.
#[allow(dead_code)]
pub fn bell_numbers(up_to: usize) -> Vec<u64> {
    let mut bell = vec![1u64];
    let mut row = vec![1u64];
    for _ in 1..=up_to {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &above in &row {
            let left = *next.last().unwrap();
            next.push(left + above);
        }
        bell.push(next[0]);
        row = next;
    }
    bell
}

/// The odd double factorial `(2n - 1)!! = 1 * 3 * 5 * ... * (2n - 1)`.
#[allow(dead_code)]
pub fn odd_double_factorial(n: usize) -> u64 {
    (1..=n).map(|i| 2 * i as u64 - 1).product()
}

/// All permutations of `[n]` in one-line notation, by Heap's algorithm.
#[allow(dead_code)]
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (1..=n).collect();
    let mut out = vec![current.clone()];
    let mut counters = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                current.swap(0, i);
            } else {
                current.swap(counters[i], i);
            }
            out.push(current.clone());
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    out
}

#[allow(dead_code)]
pub fn is_fixed_point_free_involution(sigma: &[usize]) -> bool {
    sigma
        .iter()
        .enumerate()
        .all(|(i, &j)| j != i + 1 && j >= 1 && j <= sigma.len() && sigma[j - 1] == i + 1)
}
