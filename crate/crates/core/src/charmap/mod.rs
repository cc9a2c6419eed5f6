//! Character tables, class functions, and the height-one character map with
//! its power operations.

mod classfn;
mod ops;
mod table;

pub use classfn::ClassFunction;
pub use ops::{
    adams_psi, cayley_translation, char_matrix_rank, character_map, decompose, galois_fixed_dim,
    p_power_classes, psi_level, total_power, virtual_character, TotalPower, TOTAL_POWER_CAP,
};
pub use table::{character_table, character_table_arc, CharacterTable, TABLE_ORDER_CAP};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named_group;
    use num::ToPrimitive;

    fn ints(f: &ClassFunction) -> Vec<i64> {
        f.values()
            .iter()
            .map(|v| v.to_rational().unwrap().to_integer().to_i64().unwrap())
            .collect()
    }

    #[test]
    fn character_map_examples() {
        let t = character_table(&named_group("Cyc(2)").unwrap()).unwrap();
        let sign = &t.irreducibles()[1];
        assert_eq!(ints(&character_map(&t, 2, sign).unwrap()), vec![1, -1]);

        let t = character_table(&named_group("Sym(3)").unwrap()).unwrap();
        let std = &t.irreducibles()[2];
        assert_eq!(ints(&character_map(&t, 3, std).unwrap()), vec![2, -1]);
        assert_eq!(ints(&character_map(&t, 2, std).unwrap()), vec![2, 0]);
        assert_eq!(char_matrix_rank(&t, 2).unwrap(), 2);
    }

    #[test]
    fn adams_examples() {
        let t = character_table(&named_group("Sym(3)").unwrap()).unwrap();
        let std = &t.irreducibles()[2];
        assert_eq!(&adams_psi(&t, 1, std).unwrap(), std);
        // classes: identity, 3-cycles, transpositions
        assert_eq!(ints(&adams_psi(&t, 2, std).unwrap()), vec![2, -1, 2]);
        assert_eq!(psi_level(&t, 2, 1, std).unwrap(), adams_psi(&t, 2, std).unwrap());
    }

    #[test]
    fn total_power_small_cases() {
        let t = character_table(&named_group("Sym(3)").unwrap()).unwrap();
        let std = &t.irreducibles()[2];
        let p1 = total_power(&t, 1, std).unwrap();
        assert_eq!(p1.values, vec![std.values().to_vec()]);
        let p2 = total_power(&t, 2, std).unwrap();
        assert_eq!(p2.partitions, vec![vec![2], vec![1, 1]]);
        let square = std.mul(std).unwrap();
        assert_eq!(p2.values[1], square.values().to_vec());
    }

    #[test]
    fn galois_fixed_dims() {
        let t = character_table(&named_group("Cyc(3)").unwrap()).unwrap();
        assert_eq!(galois_fixed_dim(&t, 3, 1).unwrap(), 3);
        let t = character_table(&named_group("Cyc(1)").unwrap()).unwrap();
        assert_eq!(galois_fixed_dim(&t, 2, 1).unwrap(), 1);
        let t = character_table(&named_group("Cyc(4)").unwrap()).unwrap();
        assert!(matches!(
            galois_fixed_dim(&t, 2, 1),
            Err(crate::HkrError::LevelTooSmall { .. })
        ));
    }
}
