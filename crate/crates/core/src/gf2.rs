//! Rank of small GF(2) matrices stored as bit rows.

/// Rank over GF(2) of the matrix whose rows are the given bit vectors.
pub fn rank<I: IntoIterator<Item = u32>>(rows: I) -> usize {
    let mut rows: Vec<u32> = rows.into_iter().filter(|&r| r != 0).collect();
    let mut rank = 0;
    while let Some(pivot_row) = rows.pop() {
        if pivot_row == 0 {
            continue;
        }
        rank += 1;
        let pivot = 1u32 << (31 - pivot_row.leading_zeros());
        for r in rows.iter_mut() {
            if *r & pivot != 0 {
                *r ^= pivot_row;
            }
        }
    }
    rank
}

/// Extracts the bits of `value` selected by `mask` into a dense word,
/// lowest selected bit first.
pub fn compress(value: u32, mask: u32) -> u32 {
    let mut out = 0;
    let mut k = 0;
    let mut m = mask;
    while m != 0 {
        let bit = m.trailing_zeros();
        out |= (value >> bit & 1) << k;
        k += 1;
        m &= m - 1;
    }
    out
}
