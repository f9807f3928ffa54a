//! Default verification grids per inequality id. These ship with the crate
//! so the suite is reproducible; every grid keeps >= 150 points inside the
//! id's validity domain.

use crate::bounds::InequalityId;
use crate::verify::grid::{AxisSpec, SweepGrid};

/// The open-left-endpoint floor used by grids that approach x = 0.
fn xmin() -> f64 {
    crate::open_endpoint_xmin()
}

/// The shipped default grid for one id.
pub fn default_grid(id: InequalityId) -> SweepGrid {
    use InequalityId::*;
    match id {
        // mu > nu > 0: 5 nu x 4 offsets x 10 x = 200 points
        U1 => SweepGrid {
            nu: AxisSpec::values(&[0.25, 0.5, 1.0, 2.0, 4.0]),
            mu: Some(AxisSpec::values(&[0.375, 0.75, 1.5, 3.0, 4.5, 6.0, 7.0, 8.0])),
            x: AxisSpec::log(0.1, 20.0, 10),
        },
        // mu >= nu > 0: equality pairs included through the shared value list
        U2 => SweepGrid {
            nu: AxisSpec::values(&[0.5, 1.0, 2.0, 5.0]),
            mu: Some(AxisSpec::values(&[0.5, 1.0, 2.5, 5.0, 7.0])),
            x: AxisSpec::log(0.05, 50.0, 15),
        },
        // mu - nu > -1/3 and mu + nu >= 0
        U3 => SweepGrid {
            nu: AxisSpec::values(&[-0.2, 0.0, 0.5, 2.0]),
            mu: Some(AxisSpec::values(&[0.3, 0.5, 1.0, 2.2, 4.0])),
            x: AxisSpec::log(0.05, 50.0, 12),
        },
        L1 => SweepGrid {
            nu: AxisSpec::values(&[0.5, 0.75, 1.0, 2.5, 6.0]),
            mu: None,
            x: AxisSpec::log(1e-3, 40.0, 32),
        },
        L2 => SweepGrid {
            nu: AxisSpec::values(&[0.5, 0.75, 1.0, 2.5, 6.0]),
            mu: None,
            x: AxisSpec::log(1e-3, 40.0, 32),
        },
        L3 => SweepGrid {
            nu: AxisSpec::values(&[1.2, 1.5, 2.0, 4.0, 8.0]),
            mu: None,
            x: AxisSpec::log(1e-3, 10.0, 30),
        },
        T1 => SweepGrid {
            nu: AxisSpec::values(&[0.0, 0.5, 2.0]),
            mu: None,
            x: AxisSpec::log(1e-4, 1.0, 60),
        },
        T2 => SweepGrid {
            nu: AxisSpec::values(&[0.5, 1.0, 2.0, 5.0]),
            mu: None,
            x: AxisSpec::log(0.01, 100.0, 40),
        },
        // both branches: (0,1] for nu >= 1/2 and [1,inf) for nu > -1
        T3 => SweepGrid {
            nu: AxisSpec::values(&[-0.5, 0.0, 0.5, 1.0, 2.0, 3.0]),
            mu: None,
            x: AxisSpec::log(xmin(), 50.0, 40),
        },
        TP => SweepGrid {
            nu: AxisSpec::values(&[0.75, 1.0, 2.0, 5.0]),
            mu: None,
            x: AxisSpec::log(0.01, 30.0, 40),
        },
        TI => SweepGrid {
            nu: AxisSpec::values(&[0.25, 1.0, 3.0, 7.0]),
            mu: None,
            x: AxisSpec::log(0.01, 50.0, 40),
        },
        TK => SweepGrid {
            nu: AxisSpec::values(&[-2.0, -1.5, -0.5, 0.0, 0.5, 1.5, 3.0]),
            mu: None,
            x: AxisSpec::log(0.05, 20.0, 25),
        },
        TC => SweepGrid {
            nu: AxisSpec::values(&[0.5, 1.5, 3.0, 8.0]),
            mu: None,
            x: AxisSpec::log(0.01, 30.0, 40),
        },
        LD => SweepGrid {
            nu: AxisSpec::values(&[-0.5, 0.0, 0.5, 1.0, 5.0]),
            mu: None,
            x: AxisSpec::log(1e-3, 100.0, 40),
        },
        WR => SweepGrid {
            nu: AxisSpec::values(&[-0.9, 0.0, 0.5, 2.0, 10.0, 20.0]),
            mu: None,
            x: AxisSpec::log(1e-3, 100.0, 30),
        },
        LC => SweepGrid {
            nu: AxisSpec::values(&[0.75, 1.0, 2.0, 4.0, 6.0]),
            mu: None,
            x: AxisSpec::log(0.05, 20.0, 30),
        },
        #[cfg(debug_assertions)]
        XF => SweepGrid {
            nu: AxisSpec::values(&[0.5, 1.0]),
            mu: None,
            x: AxisSpec::log(0.01, 100.0, 20),
        },
    }
}

/// The ids that make up the default verification suite, in run order.
pub fn default_suite() -> Vec<InequalityId> {
    InequalityId::ALL.to_vec()
}
