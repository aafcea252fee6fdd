"""Frozen reference values for the conditional-probability/weight tables.

Twelve values per (eta, p) row:
    (P2_diff, P2_00, P2_11, P3_diff, P3_00, P3_11,
     w2_diff, w2_00, w2_11, w3_diff, w3_00, w3_11)
for peripheral counts k=2 and k=3.  Three weight entries in the source
tables disagreed with ln((1-P)/P) applied to their own tabulated P by a
digit slip; those three are stored here in the self-consistent form
(eta=1: p=0.06 w2_11, p=0.10 w3_00; eta=100: p=0.14 w3_00).
"""

REFERENCE_TABLES = {
    1: {
        0.02: (0.015000, 0.005080, 0.649402, 0.015000, 0.005085, 0.629061, 4.184591, 5.277301, -0.616413, 4.184591, 5.276285, -0.528190),
        0.04: (0.030000, 0.010343, 0.633145, 0.030000, 0.010385, 0.595856, 3.476099, 4.561042, -0.545731, 3.476099, 4.556935, -0.388228),
        0.06: (0.045000, 0.015824, 0.617865, 0.045000, 0.015969, 0.566542, 3.055049, 4.130282, -0.480498, 3.055049, 4.120981, -0.267756),
        0.10: (0.075000, 0.027598, 0.590138, 0.075000, 0.028299, 0.517928, 2.512306, 3.562026, -0.364536, 2.512306, 3.536236, -0.071744),
        0.12: (0.090000, 0.033979, 0.577642, 0.090000, 0.035208, 0.497952, 2.313635, 3.347457, -0.313100, 2.313635, 3.310635, 0.008193),
        0.14: (0.105000, 0.040752, 0.566028, 0.105000, 0.042728, 0.480491, 2.142863, 3.158657, -0.265665, 2.142863, 3.109223, 0.078077),
        0.16: (0.120000, 0.047968, 0.555278, 0.120000, 0.050945, 0.465315, 1.992430, 2.988061, -0.222018, 1.992430, 2.924714, 0.138965),
        0.18: (0.135000, 0.055682, 0.545371, 0.135000, 0.059942, 0.452224, 1.857455, 2.830805, -0.181987, 1.857455, 2.752565, 0.191689),
        0.20: (0.150000, 0.063949, 0.536293, 0.150000, 0.069796, 0.441046, 1.734601, 2.683590, -0.145427, 1.734601, 2.589833, 0.236919),
    },
    10: {
        0.02: (0.019091, 0.000927, 0.951733, 0.019091, 0.000927, 0.950923, 3.939268, 6.982597, -2.981528, 3.939268, 6.982266, -2.964052),
        0.04: (0.038182, 0.001892, 0.951107, 0.038182, 0.001895, 0.949520, 3.226466, 6.268031, -2.967993, 3.226466, 6.266702, -2.934369),
        0.06: (0.057273, 0.002900, 0.950504, 0.057273, 0.002909, 0.948169, 2.800952, 5.840175, -2.955108, 2.800952, 5.837180, -2.906553),
        0.10: (0.095455, 0.005059, 0.949369, 0.095455, 0.005101, 0.945632, 2.248782, 5.281559, -2.931226, 2.248782, 5.273241, -2.856078),
        0.12: (0.114545, 0.006220, 0.948836, 0.114545, 0.006294, 0.944445, 2.045129, 5.073793, -2.920200, 2.045129, 5.061833, -2.833228),
        0.14: (0.133636, 0.007442, 0.948327, 0.133636, 0.007563, 0.943313, 1.869182, 4.893134, -2.909766, 1.869182, 4.876894, -2.811860),
        0.16: (0.152727, 0.008732, 0.947842, 0.152727, 0.008917, 0.942237, 1.713369, 4.732007, -2.899913, 1.713369, 4.710866, -2.791906),
        0.18: (0.171818, 0.010096, 0.947381, 0.171818, 0.010365, 0.941216, 1.572796, 4.585514, -2.890630, 1.572796, 4.558870, -2.773304),
        0.20: (0.190909, 0.011540, 0.946945, 0.190909, 0.011920, 0.940251, 1.444114, 4.450305, -2.881909, 1.444114, 4.417580, -2.755997),
    },
    100: {
        0.02: (0.019901, 0.000101, 0.995017, 0.019901, 0.000101, 0.995008, 3.896884, 9.200057, -5.296765, 3.896884, 9.200017, -5.294829),
        0.04: (0.039802, 0.000206, 0.995010, 0.039802, 0.000206, 0.994991, 3.183223, 8.486196, -5.295278, 3.183223, 8.486039, -5.291492),
        0.06: (0.059703, 0.000316, 0.995003, 0.059703, 0.000316, 0.994975, 2.756814, 8.059520, -5.293855, 2.756814, 8.059167, -5.288304),
        0.10: (0.099505, 0.000550, 0.994990, 0.099505, 0.000551, 0.994945, 2.202737, 7.504707, -5.291200, 2.202737, 7.503726, -5.282374),
        0.12: (0.119406, 0.000675, 0.994983, 0.119406, 0.000676, 0.994931, 1.998068, 7.299567, -5.289968, 1.998068, 7.298154, -5.279629),
        0.14: (0.139307, 0.000806, 0.994978, 0.139307, 0.000808, 0.994918, 1.821058, 7.122017, -5.288800, 1.821058, 7.120096, -5.277029),
        0.16: (0.159208, 0.000944, 0.994972, 0.159208, 0.000946, 0.994906, 1.664133, 6.964484, -5.287695, 1.664133, 6.961975, -5.274573),
        0.18: (0.179109, 0.001088, 0.994967, 0.179109, 0.001092, 0.994894, 1.522396, 6.822068, -5.286653, 1.522396, 6.818894, -5.272261),
        0.20: (0.199010, 0.001240, 0.994962, 0.199010, 0.001245, 0.994883, 1.392494, 6.691418, -5.285674, 1.392494, 6.687501, -5.270092),
    },
    1000: {
        0.02: (0.019990, 0.000010, 0.999500, 0.019990, 0.000010, 0.999500, 3.892330, 11.493719, -7.600746, 3.892330, 11.493715, -7.600550),
        0.04: (0.039980, 0.000021, 0.999500, 0.039980, 0.000021, 0.999500, 3.178574, 10.779943, -7.600596, 3.178574, 10.779927, -7.600212),
        0.06: (0.059970, 0.000032, 0.999500, 0.059970, 0.000032, 0.999500, 2.752067, 10.353409, -7.600452, 2.752067, 10.353373, -7.599889),
        0.10: (0.099950, 0.000056, 0.999500, 0.099950, 0.000056, 0.999499, 2.197780, 9.799047, -7.600183, 2.197780, 9.798947, -7.599285),
        0.12: (0.119940, 0.000068, 0.999500, 0.119940, 0.000068, 0.999499, 1.992998, 9.594217, -7.600059, 1.992998, 9.594073, -7.599005),
        0.14: (0.139930, 0.000081, 0.999500, 0.139930, 0.000081, 0.999499, 1.815871, 9.417035, -7.599940, 1.815871, 9.416840, -7.598739),
        0.16: (0.159920, 0.000095, 0.999500, 0.159920, 0.000095, 0.999499, 1.658823, 9.259926, -7.599829, 1.658823, 9.259670, -7.598488),
        0.18: (0.179910, 0.000110, 0.999500, 0.179910, 0.000110, 0.999499, 1.516957, 9.117991, -7.599723, 1.516957, 9.117667, -7.598251),
        0.20: (0.199900, 0.000125, 0.999500, 0.199900, 0.000125, 0.999499, 1.386919, 8.987877, -7.599624, 1.386919, 8.987478, -7.598028),
    },
}
