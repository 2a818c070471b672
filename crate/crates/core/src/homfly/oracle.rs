//! HOMFLY polynomial straight from the skein relation on the closed braid.
//!
//! Works on raw signed letters and never touches the resolution engine: a
//! diagram is made descending by switching or smoothing the first crossing
//! met from below, and a descending diagram of `c` components is an unlink
//! worth `δ^{c-1}`. Components are started from their largest strand
//! position, and labels are recomputed from scratch after every switch.

use std::collections::HashMap;

use super::HomflyPoly;
use crate::braid::BraidWord;

enum Walk {
    Descending { components: usize },
    Ascending { index: usize },
}

fn walk(strands: usize, letters: &[i32]) -> Walk {
    let mut met = vec![false; letters.len()];
    let mut started = vec![false; strands + 1];
    let mut components = 0;
    for start in (1..=strands).rev() {
        if started[start] {
            continue;
        }
        components += 1;
        let mut pos = start;
        loop {
            started[pos] = true;
            for (index, &x) in letters.iter().enumerate() {
                let g = x.unsigned_abs() as usize;
                let on_left = pos == g;
                if !on_left && pos != g + 1 {
                    continue;
                }
                if !met[index] {
                    met[index] = true;
                    if on_left != (x > 0) {
                        return Walk::Ascending { index };
                    }
                }
                pos = if on_left { g + 1 } else { g };
            }
            if pos == start {
                break;
            }
        }
    }
    Walk::Descending { components }
}

struct Oracle {
    cache: HashMap<(usize, Vec<i32>), HomflyPoly>,
    delta: HomflyPoly,
}

impl Oracle {
    fn eval(&mut self, strands: usize, letters: Vec<i32>) -> HomflyPoly {
        let key = (strands, letters);
        if let Some(p) = self.cache.get(&key) {
            return p.clone();
        }
        let letters = &key.1;
        let value = match walk(strands, letters) {
            Walk::Descending { components } => {
                (1..components).fold(HomflyPoly::one(), |acc, _| &acc * &self.delta)
            }
            Walk::Ascending { index } => {
                let x = letters[index];
                let mut switched = letters.clone();
                switched[index] = -x;
                let mut smoothed = letters.clone();
                smoothed.remove(index);
                // l P+ + l^-1 P- + m P0 = 0
                let (switch_factor, smooth_factor) = if x > 0 {
                    (HomflyPoly::term(-1, -2, 0), HomflyPoly::term(-1, -1, 1))
                } else {
                    (HomflyPoly::term(-1, 2, 0), HomflyPoly::term(-1, 1, 1))
                };
                let s = self.eval(strands, switched);
                let z = self.eval(strands, smoothed);
                &(&switch_factor * &s) + &(&smooth_factor * &z)
            }
        };
        self.cache.insert(key, value.clone());
        value
    }
}

/// HOMFLY polynomial of the closure of `w`.
pub fn homfly_oracle(w: &BraidWord) -> HomflyPoly {
    let delta = &HomflyPoly::term(-1, 1, -1) + &HomflyPoly::term(-1, -1, -1);
    let mut oracle = Oracle { cache: HashMap::new(), delta };
    oracle.eval(w.strands(), w.signed())
}
