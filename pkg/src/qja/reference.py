"""Reference values the verification suite compares against."""

DEGREE3_NULLSPACE = (
    "-a(bc) + a(cb)",
    "-b(ac) + b(ca)",
    "-c(ab) + c(ba)",
)

DEGREE4_NULLSPACE = (
    "- (a(bc))d - (a(bd))c - (a(cd))b + (ab)(cd) + (ac)(bd) + (ad)(bc)",
    "- (b(ac))d - (b(ad))c - (b(cd))a + (ba)(cd) + (bc)(ad) + (bd)(ac)",
    "- (c(ab))d - (c(ad))b - (c(bd))a + (ca)(bd) + (cb)(ad) + (cd)(ab)",
    "- (d(ab))c - (d(ac))b - (d(bc))a + (da)(bc) + (db)(ac) + (dc)(ab)",
    "((ab)d)c + ((ac)d)b - (a(bc))d - (a(bd))c - (a(cd))b + a((bc)d)",
    "((ab)c)d + ((ad)c)b - (a(bc))d - (a(bd))c - (a(cd))b + a((bd)c)",
    "((ac)b)d + ((ad)b)c - (a(bc))d - (a(bd))c - (a(cd))b + a((cd)b)",
    "((ba)d)c + ((bc)d)a - (b(ac))d - (b(ad))c - (b(cd))a + b((ac)d)",
    "((ba)c)d + ((bd)c)a - (b(ac))d - (b(ad))c - (b(cd))a + b((ad)c)",
    "((bc)a)d + ((bd)a)c - (b(ac))d - (b(ad))c - (b(cd))a + b((cd)a)",
    "((ca)d)b + ((cb)d)a - (c(ab))d - (c(ad))b - (c(bd))a + c((ab)d)",
    "((ca)b)d + ((cd)b)a - (c(ab))d - (c(ad))b - (c(bd))a + c((ad)b)",
    "((cb)a)d + ((cd)a)b - (c(ab))d - (c(ad))b - (c(bd))a + c((bd)a)",
    "((da)c)b + ((db)c)a - (d(ab))c - (d(ac))b - (d(bc))a + d((ab)c)",
    "((da)b)c + ((dc)b)a - (d(ab))c - (d(ac))b - (d(bc))a + d((ac)b)",
    "((db)a)c + ((dc)a)b - (d(ab))c - (d(ac))b - (d(bc))a + d((bc)a)",
)

E4_RANK = 44
E4_NULLITY = 16
J_MODULE_DIM = 4
K_MODULE_DIM = 12
