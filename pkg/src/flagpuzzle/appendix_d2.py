"""Tabulated d=2 R-matrix, U and D entries (q, u1, u2), transcribed verbatim.

Values are (numerator, denominator) strings for exactring.parse.
R entries are (X, Y, Z, W, drawn inversion) for the rhombus with SW=X, SE=Y, NE=Z, NW=W.
Triangle entries are the three drawn arguments and the drawn inversion; for U the
arguments are (NW, S, NE), for D they are the drawn downtri order (SE, N, SW).
"""

R_ENTRIES = (
    (('1', '1'), (
        ('0', '0', '0', '0', 0),
        ('10', '0', '10', '0', 0),
        ('20', '0', '20', '0', 0),
        ('(21)0', '0', '(21)0', '0', 0),
        ('0', '1', '0', '1', 0),
        ('1', '1', '1', '1', 0),
        ('21', '1', '21', '1', 0),
        ('(21)0', '1', '(21)0', '1', 2),
        ('0', '2', '0', '2', 0),
        ('1', '2', '1', '2', 0),
        ('2', '2', '2', '2', 0),
        ('10', '2', '10', '2', 0),
        ('1', '10', '1', '10', 0),
        ('10', '10', '10', '10', 2),
        ('(21)0', '10', '(21)0', '10', 2),
        ('2(10)', '10', '2(10)', '10', 0),
        ('2', '20', '2', '20', 0),
        ('10', '20', '10', '20', 2),
        ('20', '20', '20', '20', 2),
        ('2(10)', '20', '2(10)', '20', 2),
        ('0', '21', '0', '21', 0),
        ('2', '21', '2', '21', 0),
        ('20', '21', '20', '21', 2),
        ('21', '21', '21', '21', 2),
        ('20', '(21)0', '20', '(21)0', 2),
        ('21', '(21)0', '21', '(21)0', 0),
        ('(21)0', '(21)0', '(21)0', '(21)0', 4),
        ('2(10)', '(21)0', '2(10)', '(21)0', 2),
        ('1', '2(10)', '1', '2(10)', 2),
        ('2', '2(10)', '2', '2(10)', 0),
        ('21', '2(10)', '21', '2(10)', 2),
        ('2(10)', '2(10)', '2(10)', '2(10)', 4),
    )),
    (('(1-q^2)*u1', 'q^2*(u1-q^2*u2)'), (
        ('(21)0', '(21)0', '0', '21', 2),
    )),
    (('(1-q^2)*u1', 'q*(u1-q^2*u2)'), (
        ('(21)0', '1', '10', '2', 1),
        ('2', '2(10)', '10', '10', 1),
        ('(21)0', '(21)0', '10', '20', 3),
        ('1', '2(10)', '0', '21', 1),
        ('10', '20', '0', '21', 1),
        ('2(10)', '2(10)', '20', '21', 3),
        ('(21)0', '(21)0', '1', '2(10)', 3),
    )),
    (('(1-q^2)*u1', 'u1-q^2*u2'), (
        ('1', '10', '0', '0', 0),
        ('2', '20', '0', '0', 0),
        ('21', '(21)0', '0', '0', 0),
        ('2', '21', '10', '0', 0),
        ('2(10)', '10', '20', '0', 0),
        ('2', '2(10)', '0', '1', 0),
        ('2', '21', '1', '1', 0),
        ('10', '0', '1', '1', 0),
        ('20', '0', '21', '1', 0),
        ('2(10)', '10', '21', '1', 0),
        ('(21)0', '0', '1', '2', 0),
        ('20', '0', '2', '2', 0),
        ('21', '1', '2', '2', 0),
        ('2(10)', '10', '2', '2', 0),
        ('2(10)', '2(10)', '10', '2', 2),
        ('2', '20', '1', '10', 0),
        ('21', '(21)0', '1', '10', 0),
        ('20', '(21)0', '10', '10', 2),
        ('20', '20', '(21)0', '10', 2),
        ('21', '2(10)', '(21)0', '10', 2),
        ('21', '(21)0', '2', '20', 0),
        ('2(10)', '20', '21', '21', 2),
        ('10', '20', '1', '2(10)', 2),
        ('20', '20', '21', '2(10)', 2),
    )),
    (('q*(1-q^2)*u1', 'u1-q^2*u2'), (
        ('2(10)', '(21)0', '10', '0', 1),
        ('21', '21', '(21)0', '0', 1),
        ('2(10)', '20', '(21)0', '0', 1),
        ('10', '10', '0', '1', 1),
        ('20', '(21)0', '0', '1', 1),
        ('2(10)', '(21)0', '1', '1', 1),
        ('2(10)', '2(10)', '(21)0', '1', 3),
        ('20', '20', '0', '2', 1),
        ('21', '2(10)', '0', '2', 1),
        ('(21)0', '10', '0', '2', 1),
        ('21', '21', '1', '2', 1),
        ('2(10)', '20', '1', '2', 1),
        ('20', '21', '10', '2', 1),
        ('2(10)', '(21)0', '2', '21', 1),
        ('20', '(21)0', '2', '2(10)', 1),
    )),
    (('q^2*(1-q^2)*u1', 'u1-q^2*u2'), (
        ('20', '21', '(21)0', '1', 2),
    )),
    (('(1-q^2)*u2', 'q^2*(u1-q^2*u2)'), (
        ('(21)0', '1', '20', '21', 2),
    )),
    (('(1-q^2)*u2', 'q*(u1-q^2*u2)'), (
        ('0', '1', '10', '10', 1),
        ('0', '2', '(21)0', '10', 1),
        ('0', '2', '20', '20', 1),
        ('1', '2', '2(10)', '20', 1),
        ('(21)0', '0', '2(10)', '20', 1),
        ('10', '2', '20', '21', 1),
        ('1', '2', '21', '21', 1),
        ('(21)0', '0', '21', '21', 1),
        ('0', '1', '20', '(21)0', 1),
        ('2', '2(10)', '20', '(21)0', 1),
        ('1', '1', '2(10)', '(21)0', 1),
        ('2', '21', '2(10)', '(21)0', 1),
        ('10', '0', '2(10)', '(21)0', 1),
        ('0', '2', '21', '2(10)', 1),
        ('(21)0', '1', '2(10)', '2(10)', 3),
    )),
    (('(1-q^2)*u2', 'u1-q^2*u2'), (
        ('1', '1', '10', '0', 0),
        ('2', '2', '20', '0', 0),
        ('21', '1', '20', '0', 0),
        ('1', '2', '(21)0', '0', 0),
        ('2', '2', '21', '1', 0),
        ('0', '0', '1', '10', 0),
        ('2', '2', '2(10)', '10', 0),
        ('20', '0', '2(10)', '10', 0),
        ('21', '1', '2(10)', '10', 0),
        ('0', '0', '2', '20', 0),
        ('1', '10', '2', '20', 0),
        ('1', '2(10)', '10', '20', 2),
        ('21', '2(10)', '20', '20', 2),
        ('(21)0', '10', '20', '20', 2),
        ('21', '21', '2(10)', '20', 2),
        ('1', '1', '2', '21', 0),
        ('10', '0', '2', '21', 0),
        ('10', '10', '20', '(21)0', 2),
        ('0', '0', '21', '(21)0', 0),
        ('1', '10', '21', '(21)0', 0),
        ('2', '20', '21', '(21)0', 0),
        ('0', '1', '2', '2(10)', 0),
        ('(21)0', '10', '21', '2(10)', 2),
        ('10', '2', '2(10)', '2(10)', 2),
    )),
    (('q*(1-q^2)*u2', 'u1-q^2*u2'), (
        ('10', '2', '(21)0', '1', 1),
        ('0', '21', '10', '20', 1),
        ('1', '2(10)', '(21)0', '(21)0', 3),
        ('10', '20', '(21)0', '(21)0', 3),
        ('0', '21', '1', '2(10)', 1),
        ('10', '10', '2', '2(10)', 1),
        ('20', '21', '2(10)', '2(10)', 3),
    )),
    (('q^2*(1-q^2)*u2', 'u1-q^2*u2'), (
        ('0', '21', '(21)0', '(21)0', 2),
    )),
    (('q*(u1-u2)', 'u1-q^2*u2'), (
        ('1', '0', '1', '0', -1),
        ('2', '0', '2', '0', -1),
        ('21', '0', '21', '0', -1),
        ('2(10)', '0', '2(10)', '0', -1),
        ('2', '1', '2', '1', -1),
        ('10', '1', '10', '1', 1),
        ('20', '1', '20', '1', 1),
        ('2(10)', '1', '2(10)', '1', 1),
        ('20', '2', '20', '2', 1),
        ('21', '2', '21', '2', 1),
        ('(21)0', '2', '(21)0', '2', 1),
        ('2(10)', '2', '2(10)', '2', 1),
        ('0', '10', '0', '10', 1),
        ('2', '10', '2', '10', -1),
        ('20', '10', '20', '10', 1),
        ('21', '10', '21', '10', -1),
        ('0', '20', '0', '20', 1),
        ('1', '20', '1', '20', 1),
        ('21', '20', '21', '20', 1),
        ('(21)0', '20', '(21)0', '20', 3),
        ('1', '21', '1', '21', 1),
        ('10', '21', '10', '21', 1),
        ('(21)0', '21', '(21)0', '21', 3),
        ('2(10)', '21', '2(10)', '21', 3),
        ('0', '(21)0', '0', '(21)0', 1),
        ('1', '(21)0', '1', '(21)0', 1),
        ('2', '(21)0', '2', '(21)0', -1),
        ('10', '(21)0', '10', '(21)0', 3),
        ('0', '2(10)', '0', '2(10)', 1),
        ('10', '2(10)', '10', '2(10)', 3),
        ('20', '2(10)', '20', '2(10)', 3),
        ('(21)0', '2(10)', '(21)0', '2(10)', 5),
    )),
)

U_ENTRIES = (
    (('-1', 'q'), (
        ('10', '10', '10', 1),
        ('10', '20', '(21)0', 1),
        ('20', '20', '20', 1),
        ('20', '21', '2(10)', 1),
        ('21', '2(10)', '20', 1),
        ('21', '21', '21', 1),
        ('(21)0', '10', '20', 1),
        ('(21)0', '1', '2(10)', 1),
        ('2(10)', '20', '21', 1),
    )),
    (('1', '1'), (
        ('0', '0', '0', 0),
        ('0', '1', '10', 0),
        ('0', '2', '20', 0),
        ('0', '21', '(21)0', 0),
        ('1', '10', '0', 0),
        ('1', '1', '1', 0),
        ('1', '2', '21', 0),
        ('2', '20', '0', 0),
        ('2', '21', '1', 0),
        ('2', '2', '2', 0),
        ('2', '2(10)', '10', 0),
        ('10', '0', '1', 0),
        ('10', '2', '2(10)', 0),
        ('20', '0', '2', 0),
        ('21', '(21)0', '0', 0),
        ('21', '1', '2', 0),
        ('(21)0', '0', '21', 0),
        ('2(10)', '10', '2', 0),
        ('2(10)', '2(10)', '2(10)', 2),
    )),
    (('-q', '1'), (
        ('1', '2(10)', '(21)0', 1),
        ('20', '(21)0', '10', 1),
        ('2(10)', '(21)0', '1', 1),
    )),
    (('q^2', '1'), (
        ('(21)0', '(21)0', '(21)0', 2),
    )),
)

D_ENTRIES = (
    (('1', 'q^2'), (
        ('(21)0', '(21)0', '(21)0', 2),
    )),
    (('-1', 'q'), (
        ('1', '2(10)', '(21)0', 1),
        ('2(10)', '(21)0', '1', 1),
        ('20', '(21)0', '10', 1),
    )),
    (('1', '1'), (
        ('2', '2(10)', '10', 0),
        ('2(10)', '2(10)', '2(10)', 2),
        ('2', '20', '0', 0),
        ('21', '(21)0', '0', 0),
        ('2', '21', '1', 0),
        ('0', '21', '(21)0', 0),
        ('1', '1', '1', 0),
        ('21', '1', '2', 0),
        ('0', '1', '10', 0),
        ('1', '10', '0', 0),
        ('2(10)', '10', '2', 0),
        ('2', '2', '2', 0),
        ('0', '2', '20', 0),
        ('1', '2', '21', 0),
        ('10', '2', '2(10)', 0),
        ('0', '0', '0', 0),
        ('10', '0', '1', 0),
        ('20', '0', '2', 0),
        ('(21)0', '0', '21', 0),
    )),
    (('-q', '1'), (
        ('21', '2(10)', '20', 1),
        ('20', '20', '20', 1),
        ('2(10)', '20', '21', 1),
        ('10', '20', '(21)0', 1),
        ('21', '21', '21', 1),
        ('20', '21', '2(10)', 1),
        ('(21)0', '1', '2(10)', 1),
        ('10', '10', '10', 1),
        ('(21)0', '10', '20', 1),
    )),
)
