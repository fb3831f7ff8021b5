use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_partitions`]; `p(60) = 966467`.
pub const PARTITION_CAP: usize = 60;

/// A multiplicity vector `(x_1, ..., x_n)` with `Σ i·x_i = n`, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTuple {
    /// `(i, x_i)` for every part size `i` with `x_i > 0`, largest part first.
    pub parts: Vec<(usize, u32)>,
    /// `q = Σ x_i`, the number of parts.
    pub q: u32,
}

impl PartitionTuple {
    pub fn n(&self) -> usize {
        self.parts.iter().map(|&(i, x)| i * x as usize).sum()
    }

    /// Dense multiplicity vector `(x_1, ..., x_n)`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut x = vec![0; self.n()];
        for &(i, xi) in &self.parts {
            x[i - 1] = xi;
        }
        x
    }
}

/// Calls `visit(parts, q)` once for every partition of `n`.
pub fn for_each_partition<F: FnMut(&[(usize, u32)], u32)>(n: usize, mut visit: F) -> Result<()> {
    if n > PARTITION_CAP {
        return Err(Error::CapExceeded { n, cap: PARTITION_CAP });
    }
    let mut stack = Vec::new();
    walk(n, n, 0, &mut stack, &mut visit);
    Ok(())
}

fn walk<F: FnMut(&[(usize, u32)], u32)>(
    remaining: usize,
    max_part: usize,
    q: u32,
    stack: &mut Vec<(usize, u32)>,
    visit: &mut F,
) {
    if remaining == 0 {
        visit(stack, q);
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        for count in (1..=remaining / part).rev() {
            stack.push((part, count as u32));
            walk(remaining - part * count, part - 1, q + count as u32, stack, visit);
            stack.pop();
        }
    }
}

/// All multiplicity vectors of `n`; there are `p(n)` of them.
pub fn enumerate_partitions(n: usize) -> Result<Vec<PartitionTuple>> {
    if n == 0 {
        return Err(crate::error::invalid("partitions are enumerated for n ≥ 1"));
    }
    let mut out = Vec::new();
    for_each_partition(n, |parts, q| out.push(PartitionTuple { parts: parts.to_vec(), q }))?;
    Ok(out)
}
