//! Published values the checks compare against.

use diagcomm::hilbert::BidegreePolynomial;
use diagcomm::permlab::Permutation;

/// Degrees of the components for `n <= 3` (`d_12 = d_1 d_1`).
pub fn degree(pi: &Permutation) -> Option<u64> {
    let d = match pi.to_string().as_str() {
        "1" | "12" | "123" => 1,
        "21" | "213" | "132" => 3,
        "231" | "312" => 13,
        "321" => 31,
        _ => return None,
    };
    Some(d)
}

pub fn bidegree(pi: &Permutation) -> Option<BidegreePolynomial> {
    let text = match pi.to_string().as_str() {
        "1" => "1",
        "21" => "A^2 + AB + B^2",
        "123" => "A^3B^3",
        "231" => "2A^5B + 4A^4B^2 + 4A^3B^3 + 2A^2B^4 + AB^5",
        "312" => "A^5B + 2A^4B^2 + 4A^3B^3 + 4A^2B^4 + 2AB^5",
        "321" => "A^6 + 3A^5B + 7A^4B^2 + 9A^3B^3 + 7A^2B^4 + 3AB^5 + B^6",
        _ => return None,
    };
    Some(BidegreePolynomial::parse(text).expect("well-formed constant"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_consistent() {
        for n in 1..=3 {
            let total: u64 = Permutation::all(n).iter().map(|p| degree(p).unwrap()).sum();
            assert_eq!(total, 1 << (n * n - n));
        }
        for p in ["1", "21", "123", "231", "312", "321"] {
            let pi: Permutation = p.parse().unwrap();
            assert_eq!(bidegree(&pi).unwrap().eval_at_one(), degree(&pi).unwrap());
        }
        assert_eq!(degree(&"1234".parse().unwrap()), None);
    }
}
