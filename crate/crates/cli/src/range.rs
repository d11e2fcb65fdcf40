use std::fmt;
use std::str::FromStr;

/// A list of positive integers written as `3`, `1..6` (inclusive),
/// `1..=6`, or a comma separated mix such as `1,3,5..7`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntList(pub Vec<u32>);

impl IntList {
    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// Consecutive ascending values, as needed for sequence fitting.
    pub fn is_contiguous(&self) -> bool {
        self.0.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim) {
            if part.is_empty() {
                return Err(format!("empty item in {s:?}"));
            }
            let num = |t: &str| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("{t:?} is not a non-negative integer"))
            };
            match part.split_once("..") {
                Some((lo, hi)) => {
                    let (lo, hi) = (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?);
                    if lo > hi {
                        return Err(format!("empty range {part:?}"));
                    }
                    out.extend(lo..=hi);
                }
                None => out.push(num(part)?),
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(IntList(out))
    }
}

impl fmt::Display for IntList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&items.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Vec<u32> {
        s.parse::<IntList>().unwrap().0
    }

    #[test]
    fn forms() {
        assert_eq!(parse("3"), vec![3]);
        assert_eq!(parse("1..6"), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(parse("1..=3"), vec![1, 2, 3]);
        assert_eq!(parse("5,1..2, 2"), vec![1, 2, 5]);
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "a", "3..1", "1,,2", "-1", "1..x"] {
            assert!(bad.parse::<IntList>().is_err(), "{bad}");
        }
    }

    #[test]
    fn contiguity() {
        assert!("2..5".parse::<IntList>().unwrap().is_contiguous());
        assert!(!"1,3".parse::<IntList>().unwrap().is_contiguous());
    }
}
