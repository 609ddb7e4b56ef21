use pbec::oracle::{self, OracleBudget};
use pbec::{FieldSpec, PbeChannel};
use std::time::Instant;

fn main() {
    let gf2 = FieldSpec::prime(2).unwrap();
    let budget = OracleBudget::default();
    for (n, m, t, w) in [(2usize, 2usize, 1usize, 1usize), (3, 2, 1, 1), (2, 3, 1, 1), (6, 2, 2, 2), (3, 4, 2, 2), (4, 2, 1, 1), (3, 3, 1, 1), (5, 2, 1, 1), (4, 3, 1, 1), (2, 6, 1, 2), (3, 4, 1, 2), (4, 3, 2, 1), (6, 2, 1, 1), (2, 5, 1, 2), (2, 4, 1, 1)] {
        let ch = PbeChannel::hamming(gf2.clone(), n, m, t, w).unwrap();
        let start = Instant::now();
        let res = oracle::max_code_search(&ch, &budget);
        match res {
            Ok((size, _)) => println!("({n},{m},{t},{w}): max {size}, pigeonhole {:?}, {:?}", oracle::pigeonhole_bound(&ch).unwrap(), start.elapsed()),
            Err(e) => println!("({n},{m},{t},{w}): {e}"),
        }
    }
}
