//! Budgets are process-wide, so this file holds a single test.

use sylprob_core::builders::{alternating, symmetric};
use sylprob_core::limits::Limits;
use sylprob_core::probability::pr_star_all;
use sylprob_core::structure::{quotient_group, sylow_subgroup};
use sylprob_core::GroupError;

#[test]
fn budgets_are_hard_errors() {
    assert!(Limits {
        enumeration_budget: 0,
        ..Limits::default()
    }
    .install()
    .is_err());
    Limits {
        enumeration_budget: 100,
        quotient_degree_budget: 3,
    }
    .install()
    .unwrap();
    assert_eq!(Limits::current().enumeration_budget, 100);

    // orders are still known without enumerating
    let s6 = symmetric(6).unwrap();
    assert_eq!(s6.order(), 720);
    let err = pr_star_all(&s6).unwrap_err();
    assert!(err.is_budget(), "{err}");
    assert!(matches!(s6.elements(), Err(GroupError::BudgetExceeded { .. })));

    let s4 = symmetric(4).unwrap();
    let v4 = sylow_subgroup(&alternating(4).unwrap(), 2).unwrap();
    let err = quotient_group(&s4, &v4).unwrap_err();
    assert!(
        matches!(
            err,
            GroupError::BudgetExceeded {
                what: "quotient degree",
                ..
            }
        ),
        "{err}"
    );
    assert!(quotient_group(&s4, &s4).is_ok());

    Limits::default().install().unwrap();
    assert_eq!(quotient_group(&s4, &v4).unwrap().group().order(), 6);
}
