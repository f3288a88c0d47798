//! Orchestration: run the family sweeps, derive a-numbers and L-polynomials,
//! sort deterministically, and assign isogeny classes.

use crate::record::{CurveModel, CurveRecord};
use crate::zeta::{self, IsoClass};
use crate::{hyper, trig, Result};

/// Which families to enumerate and how deep the singularity search goes.
#[derive(Debug, Clone, Copy)]
pub struct CensusOptions {
    pub hyperelliptic: bool,
    pub trigonal: bool,
    pub kmax: u32,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { hyperelliptic: true, trigonal: true, kmax: trig::VALIDATED_KMAX }
    }
}

/// A finished census: records in output order plus the isogeny classes.
#[derive(Debug, Clone)]
pub struct CensusResult {
    pub records: Vec<CurveRecord>,
    pub iso_classes: Vec<IsoClass>,
}

impl CensusResult {
    pub fn hyp_count(&self) -> usize {
        self.records.iter().filter(|r| r.is_hyperelliptic()).count()
    }

    pub fn trig_count(&self) -> usize {
        self.records.len() - self.hyp_count()
    }
}

/// Run the census. Records are ordered hyperelliptic first by (q, p) masks,
/// then trigonal by (quadric label, cubic mask); ids are 1-based in that
/// order and isogeny-class ids follow the lexicographic order of the
/// L-coefficient vectors, so the output is identical across runs and worker
/// counts.
pub fn run(opts: CensusOptions) -> Result<CensusResult> {
    let mut records = Vec::new();
    if opts.hyperelliptic {
        for c in hyper::census() {
            records.push(make_record(
                CurveModel::Hyperelliptic { q: c.q, p: c.p },
                c.n,
            )?);
        }
    }
    if opts.trigonal {
        for c in trig::census(opts.kmax) {
            records.push(make_record(
                CurveModel::Trigonal { quadric: c.quadric, cubic: c.cubic },
                c.n,
            )?);
        }
    }
    for (i, r) in records.iter_mut().enumerate() {
        r.id = i as u32 + 1;
    }
    let iso_classes = zeta::isogeny_group(&mut records);
    Ok(CensusResult { records, iso_classes })
}

fn make_record(model: CurveModel, n: [i64; 5]) -> Result<CurveRecord> {
    let a_vec = zeta::a_numbers(&n)?;
    let l = zeta::l_from_counts(&[n[0], n[1], n[2], n[3]])?;
    let mut a = [0i64; 5];
    a.copy_from_slice(&a_vec);
    Ok(CurveRecord { id: 0, model, n, a, l, iso_class: 0, iso_size: 0 })
}
