"""Frozen golden values for the special-function kernel.

Generated by scripts/make_specfun_table.py with mpmath at 40 digits; do not
edit by hand. Each Bessel entry is (nu, z, re, im) for I_(i nu)(z).
"""

BESSEL_I_IMAG_ORDER = (
    (0.5, 0.01, -0.8967209375741292, -0.8130206310926599),
    (0.5, 0.1, 0.3768913814798248, -1.152768767057892),
    (0.5, 0.5, 1.132169573720205, -0.5799661155570657),
    (0.5, 1.0, 1.4440165142331278, -0.28132156861029883),
    (0.5, 2.0, 2.4904853295894434, -0.07920683555109428),
    (0.5, 5.0, 28.025853684631223, -0.0026425348582313235),
    (0.5, 10.0, 2853.160746435149, -1.2869831557525158e-05),
    (1.0, 0.01, 0.5377856660771835, 1.8403685476184377),
    (1.0, 0.1, -1.7317142493677666, -0.8285213699557602),
    (1.0, 0.5, 0.8699973632047544, -1.7770016885719335),
    (1.0, 1.0, 1.9007996758194254, -1.063960013554441),
    (1.0, 2.0, 3.217490663271961, -0.33961614834290055),
    (1.0, 5.0, 30.542593924781222, -0.012377721889973096),
    (1.0, 10.0, 2968.640799269459, -6.231222598481186e-05),
    (2.0, 0.01, -1.7366836365505636, 6.292636923739504),
    (2.0, 0.1, 6.446581727087804, 1.0474542036915),
    (2.0, 0.5, -6.4595404378048515, -1.4063985380291348),
    (2.0, 1.0, -0.3076024041488372, -6.870651884686908),
    (2.0, 2.0, 7.161099217576451, -4.09066941296885),
    (2.0, 5.0, 43.53942021353525, -0.21728033706987457),
    (2.0, 10.0, 3481.627923898198, -0.0012512886628484494),
    (5.0, 0.01, 205.00344663100654, 411.33011688751117),
    (5.0, 0.1, 458.9464902244399, 25.044371701632958),
    (5.0, 0.5, -107.79600375638977, 447.90687983416774),
    (5.0, 1.0, 232.2553148990097, -401.80282981770364),
    (5.0, 2.0, -309.10010552900115, 365.7647898964467),
    (5.0, 5.0, 584.5656995391126, -336.46154766248327),
    (5.0, 10.0, 11015.956485460407, -5.574184071293771),
    (10.0, 0.01, -575593.7850073299, 607844.8178058997),
    (10.0, 0.1, 816638.5113513038, 184172.2494475677),
    (10.0, 0.5, -690255.988855788, -474551.0756098265),
    (10.0, 1.0, -278927.26390158816, -791503.1252218871),
    (10.0, 2.0, 196725.55895948998, -822418.4134834555),
    (10.0, 5.0, 480948.2465706773, 758625.6939952518),
    (10.0, 10.0, 1193902.9733770543, -688460.4299694229),
    (20.0, 0.01, -2146547730426.342, -3289468670506.065),
    (20.0, 0.1, 3915445122256.734, -312651947248.0939),
    (20.0, 0.5, 3029444027735.563, 2501109712990.2837),
    (20.0, 1.0, -1554326668834.7244, 3609932271565.367),
    (20.0, 2.0, -3920024549593.983, -373097807834.54016),
    (20.0, 5.0, -3070711169844.83, 2550187028196.2935),
    (20.0, 10.0, -3932880122324.432, 1527659232939.4382),
    (30.0, 0.01, 1.6141674222994053e+19, 1.386841737618146e+19),
    (30.0, 0.1, 1.6651216617104509e+19, 1.3252400557793567e+19),
    (30.0, 0.5, 5.444154305707005e+18, -2.057451457864139e+19),
    (30.0, 1.0, 1.7244338619759483e+19, 1.2480822921871004e+19),
    (30.0, 2.0, -1.7640861451914762e+19, 1.1945512777073584e+19),
    (30.0, 5.0, 3.0968346480407917e+17, -2.1429120556506874e+19),
    (30.0, 10.0, 2.1251297351999144e+19, -5.357043199829756e+18),
)

COMPLEX_GAMMA = (
    (1.0, 1.0, 0.49801566811835607, -0.15494982830181067),
    (0.5, 0.0, 1.772453850905516, 0.0),
    (5.0, 0.0, 24.0, 0.0),
    (2.0, 10.0, -1.0892586768758155e-05, 5.047377240466007e-06),
    (1.0, 30.0, -3.9764735612004937e-20, -2.503645259198026e-20),
    (1.0, 50.0, -4.0823246773266696e-34, 1.3158660530988403e-33),
    (-1.5, 0.0, 2.363271801207355, 0.0),
    (0.25, -3.0, 0.01705032393424412, 0.0015968774203813359),
)
