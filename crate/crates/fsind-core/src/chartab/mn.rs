//! Integer character values of the full symmetric group by the
//! Murnaghan-Nakayama border-strip recursion, with partitions handled as
//! beta-sets (first-column hook lengths).

use std::collections::HashMap;

/// `chi_lambda` evaluated on the class of cycle type `mu`; both partitions
/// are given with parts in decreasing order.
pub fn character_value(lambda: &[usize], mu: &[usize]) -> i64 {
    let mut memo = HashMap::new();
    mn(lambda.to_vec(), mu.to_vec(), &mut memo)
}

fn mn(
    lambda: Vec<usize>,
    mu: Vec<usize>,
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>,
) -> i64 {
    if lambda.is_empty() {
        return 1;
    }
    if let Some(&v) = memo.get(&(lambda.clone(), mu.clone())) {
        return v;
    }
    let m = mu[0];
    let rest: Vec<usize> = mu[1..].to_vec();
    let k = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &part)| part + (k - 1 - i))
        .collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < m || beta.contains(&(b - m)) {
            continue;
        }
        // height of the strip = number of beta entries strictly between
        // b - m and b
        let height = beta
            .iter()
            .filter(|&&c| c > b - m && c < b)
            .count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[idx] = b - m;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let mut nl: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (k - 1 - i))
            .collect();
        while nl.last() == Some(&0) {
            nl.pop();
        }
        total += sign * mn(nl, rest.clone(), memo);
    }
    memo.insert((lambda, mu), total);
    total
}
