"""Embedded quadrature point/weight tables.

Triangle rules: fully symmetric, positive-weight, interior-point rules.
Degrees 2 and 5 are the classical closed-form rules (interior 3-point and
Stroud 7-point).  Degrees 6-12 come from conical products (Gauss-Legendre
x Gauss-Jacobi for the weight (1-t)) averaged over the three cyclic
rotations of the barycentric coordinates; those constants were computed
in 50-digit arithmetic and are correctly rounded doubles.  Each degree-d
rule reproduces every monomial of total degree <= d to a few ulp.

Edge rules: Gauss-Legendre on [0, 1], n = 1..6 points (degree 2n-1).

TRI_TABLES maps degree -> (barycentric points, weights); weights sum to
the reference-triangle area 1/2.  EDGE_TABLES maps point count ->
(parameters, weights); weights sum to 1.
"""

_S15 = 15.0 ** 0.5
_A = (6.0 - _S15) / 21.0
_B = (6.0 + _S15) / 21.0
_WA = (155.0 - _S15) / 2400.0
_WB = (155.0 + _S15) / 2400.0

TRI_TABLES = {
    2: (
        (
            (2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0),
            (1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0),
            (1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0),
        ),
        (1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0),
    ),
    5: (
        (
            (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0),
            (1.0 - 2.0 * _A, _A, _A),
            (_A, 1.0 - 2.0 * _A, _A),
            (_A, _A, 1.0 - 2.0 * _A),
            (1.0 - 2.0 * _B, _B, _B),
            (_B, 1.0 - 2.0 * _B, _B),
            (_B, _B, 1.0 - 2.0 * _B),
        ),
        (9.0 / 80.0, _WA, _WA, _WA, _WB, _WB, _WB),
    ),
    6: (
        (
            (0.8774288093304679, 0.06546699455501447, 0.05710419611451768),
            (0.06546699455501447, 0.05710419611451768, 0.8774288093304679),
            (0.05710419611451768, 0.8774288093304679, 0.06546699455501447),
            (0.6317312516411253, 0.311164552244357, 0.05710419611451768),
            (0.311164552244357, 0.05710419611451768, 0.6317312516411253),
            (0.05710419611451768, 0.6317312516411253, 0.311164552244357),
            (0.311164552244357, 0.6317312516411253, 0.05710419611451768),
            (0.6317312516411253, 0.05710419611451768, 0.311164552244357),
            (0.05710419611451768, 0.311164552244357, 0.6317312516411253),
            (0.06546699455501447, 0.8774288093304679, 0.05710419611451768),
            (0.8774288093304679, 0.05710419611451768, 0.06546699455501447),
            (0.05710419611451768, 0.06546699455501447, 0.8774288093304679),
            (0.6729468631505064, 0.05021012321136977, 0.2768430136381238),
            (0.05021012321136977, 0.2768430136381238, 0.6729468631505064),
            (0.2768430136381238, 0.6729468631505064, 0.05021012321136977),
            (0.48450832663043325, 0.23864865973144292, 0.2768430136381238),
            (0.23864865973144292, 0.2768430136381238, 0.48450832663043325),
            (0.2768430136381238, 0.48450832663043325, 0.23864865973144292),
            (0.23864865973144292, 0.48450832663043325, 0.2768430136381238),
            (0.48450832663043325, 0.2768430136381238, 0.23864865973144292),
            (0.2768430136381238, 0.23864865973144292, 0.48450832663043325),
            (0.05021012321136977, 0.6729468631505064, 0.2768430136381238),
            (0.6729468631505064, 0.2768430136381238, 0.05021012321136977),
            (0.2768430136381238, 0.05021012321136977, 0.6729468631505064),
            (0.38749748340669415, 0.028912084224389012, 0.5835904323689168),
            (0.028912084224389012, 0.5835904323689168, 0.38749748340669415),
            (0.5835904323689168, 0.38749748340669415, 0.028912084224389012),
            (0.2789904634965088, 0.13741910413457437, 0.5835904323689168),
            (0.13741910413457437, 0.5835904323689168, 0.2789904634965088),
            (0.5835904323689168, 0.2789904634965088, 0.13741910413457437),
            (0.13741910413457437, 0.2789904634965088, 0.5835904323689168),
            (0.2789904634965088, 0.5835904323689168, 0.13741910413457437),
            (0.5835904323689168, 0.13741910413457437, 0.2789904634965088),
            (0.028912084224389012, 0.38749748340669415, 0.5835904323689168),
            (0.38749748340669415, 0.5835904323689168, 0.028912084224389012),
            (0.5835904323689168, 0.028912084224389012, 0.38749748340669415),
            (0.13005607921683443, 0.009703785126946113, 0.8602401356562195),
            (0.009703785126946113, 0.8602401356562195, 0.13005607921683443),
            (0.8602401356562195, 0.13005607921683443, 0.009703785126946113),
            (0.09363778443732851, 0.04612207990645205, 0.8602401356562195),
            (0.04612207990645205, 0.8602401356562195, 0.09363778443732851),
            (0.8602401356562195, 0.09363778443732851, 0.04612207990645205),
            (0.04612207990645205, 0.09363778443732851, 0.8602401356562195),
            (0.09363778443732851, 0.8602401356562195, 0.04612207990645205),
            (0.8602401356562195, 0.04612207990645205, 0.09363778443732851),
            (0.009703785126946113, 0.13005607921683443, 0.8602401356562195),
            (0.13005607921683443, 0.8602401356562195, 0.009703785126946113),
            (0.8602401356562195, 0.009703785126946113, 0.13005607921683443),
        ),
        (
            0.007856122731127443,
            0.007856122731127443,
            0.007856122731127443,
            0.014728362840787242,
            0.014728362840787242,
            0.014728362840787242,
            0.014728362840787242,
            0.014728362840787242,
            0.014728362840787242,
            0.007856122731127443,
            0.007856122731127443,
            0.007856122731127443,
            0.011796022632695316,
            0.011796022632695316,
            0.011796022632695316,
            0.022114738702349913,
            0.022114738702349913,
            0.022114738702349913,
            0.022114738702349913,
            0.022114738702349913,
            0.022114738702349913,
            0.011796022632695316,
            0.011796022632695316,
            0.011796022632695316,
            0.007528016427456644,
            0.007528016427456644,
            0.007528016427456644,
            0.014113241507248762,
            0.014113241507248762,
            0.014113241507248762,
            0.014113241507248762,
            0.014113241507248762,
            0.014113241507248762,
            0.007528016427456644,
            0.007528016427456644,
            0.007528016427456644,
            0.0018077419701750849,
            0.0018077419701750849,
            0.0018077419701750849,
            0.003389086521492929,
            0.003389086521492929,
            0.003389086521492929,
            0.003389086521492929,
            0.003389086521492929,
            0.003389086521492929,
            0.0018077419701750849,
            0.0018077419701750849,
            0.0018077419701750849,
        ),
    ),
    8: (
        (
            (0.9151475493787276, 0.045042593569803724, 0.03980985705146874),
            (0.045042593569803724, 0.03980985705146874, 0.9151475493787276),
            (0.03980985705146874, 0.9151475493787276, 0.045042593569803724),
            (0.738611533396152, 0.2215786095523792, 0.03980985705146874),
            (0.2215786095523792, 0.03980985705146874, 0.738611533396152),
            (0.03980985705146874, 0.738611533396152, 0.2215786095523792),
            (0.4800950714742656, 0.4800950714742656, 0.03980985705146874),
            (0.4800950714742656, 0.03980985705146874, 0.4800950714742656),
            (0.03980985705146874, 0.4800950714742656, 0.4800950714742656),
            (0.2215786095523792, 0.738611533396152, 0.03980985705146874),
            (0.738611533396152, 0.03980985705146874, 0.2215786095523792),
            (0.03980985705146874, 0.2215786095523792, 0.738611533396152),
            (0.045042593569803724, 0.9151475493787276, 0.03980985705146874),
            (0.9151475493787276, 0.03980985705146874, 0.045042593569803724),
            (0.03980985705146874, 0.045042593569803724, 0.9151475493787276),
            (0.7643653297812807, 0.03762125234511119, 0.19801341787360818),
            (0.03762125234511119, 0.19801341787360818, 0.7643653297812807),
            (0.19801341787360818, 0.7643653297812807, 0.03762125234511119),
            (0.6169158718590024, 0.18507071026738944, 0.19801341787360818),
            (0.18507071026738944, 0.19801341787360818, 0.6169158718590024),
            (0.19801341787360818, 0.6169158718590024, 0.18507071026738944),
            (0.4009932910631959, 0.4009932910631959, 0.19801341787360818),
            (0.4009932910631959, 0.19801341787360818, 0.4009932910631959),
            (0.19801341787360818, 0.4009932910631959, 0.4009932910631959),
            (0.18507071026738944, 0.6169158718590024, 0.19801341787360818),
            (0.6169158718590024, 0.19801341787360818, 0.18507071026738944),
            (0.19801341787360818, 0.18507071026738944, 0.6169158718590024),
            (0.03762125234511119, 0.7643653297812807, 0.19801341787360818),
            (0.7643653297812807, 0.19801341787360818, 0.03762125234511119),
            (0.19801341787360818, 0.03762125234511119, 0.7643653297812807),
            (0.535660544808143, 0.026364644944470918, 0.43797481024738616),
            (0.026364644944470918, 0.43797481024738616, 0.535660544808143),
            (0.43797481024738616, 0.535660544808143, 0.026364644944470918),
            (0.43232925297035973, 0.12969593678225413, 0.43797481024738616),
            (0.12969593678225413, 0.43797481024738616, 0.43232925297035973),
            (0.43797481024738616, 0.43232925297035973, 0.12969593678225413),
            (0.2810125948763069, 0.2810125948763069, 0.43797481024738616),
            (0.2810125948763069, 0.43797481024738616, 0.2810125948763069),
            (0.43797481024738616, 0.2810125948763069, 0.2810125948763069),
            (0.12969593678225413, 0.43232925297035973, 0.43797481024738616),
            (0.43232925297035973, 0.43797481024738616, 0.12969593678225413),
            (0.43797481024738616, 0.12969593678225413, 0.43232925297035973),
            (0.026364644944470918, 0.535660544808143, 0.43797481024738616),
            (0.535660544808143, 0.43797481024738616, 0.026364644944470918),
            (0.43797481024738616, 0.026364644944470918, 0.535660544808143),
            (0.29024993225079254, 0.014285794395571386, 0.6954642733536361),
            (0.014285794395571386, 0.6954642733536361, 0.29024993225079254),
            (0.6954642733536361, 0.29024993225079254, 0.014285794395571386),
            (0.2342594346380822, 0.07027629200828173, 0.6954642733536361),
            (0.07027629200828173, 0.6954642733536361, 0.2342594346380822),
            (0.6954642733536361, 0.2342594346380822, 0.07027629200828173),
            (0.15226786332318196, 0.15226786332318196, 0.6954642733536361),
            (0.15226786332318196, 0.6954642733536361, 0.15226786332318196),
            (0.6954642733536361, 0.15226786332318196, 0.15226786332318196),
            (0.07027629200828173, 0.2342594346380822, 0.6954642733536361),
            (0.2342594346380822, 0.6954642733536361, 0.07027629200828173),
            (0.6954642733536361, 0.07027629200828173, 0.2342594346380822),
            (0.014285794395571386, 0.29024993225079254, 0.6954642733536361),
            (0.29024993225079254, 0.6954642733536361, 0.014285794395571386),
            (0.6954642733536361, 0.014285794395571386, 0.29024993225079254),
            (0.09391279733378, 0.004622288465046429, 0.9014649142011736),
            (0.004622288465046429, 0.9014649142011736, 0.09391279733378),
            (0.9014649142011736, 0.09391279733378, 0.004622288465046429),
            (0.07579660273506239, 0.022738483063764036, 0.9014649142011736),
            (0.022738483063764036, 0.9014649142011736, 0.07579660273506239),
            (0.9014649142011736, 0.07579660273506239, 0.022738483063764036),
            (0.049267542899413215, 0.049267542899413215, 0.9014649142011736),
            (0.049267542899413215, 0.9014649142011736, 0.049267542899413215),
            (0.9014649142011736, 0.049267542899413215, 0.049267542899413215),
            (0.022738483063764036, 0.07579660273506239, 0.9014649142011736),
            (0.07579660273506239, 0.9014649142011736, 0.022738483063764036),
            (0.9014649142011736, 0.022738483063764036, 0.07579660273506239),
            (0.004622288465046429, 0.09391279733378, 0.9014649142011736),
            (0.09391279733378, 0.9014649142011736, 0.004622288465046429),
            (0.9014649142011736, 0.004622288465046429, 0.09391279733378),
        ),
        (
            0.0038216934505308493,
            0.0038216934505308493,
            0.0038216934505308493,
            0.007720407309832795,
            0.007720407309832795,
            0.007720407309832795,
            0.00917632855482327,
            0.00917632855482327,
            0.00917632855482327,
            0.007720407309832795,
            0.007720407309832795,
            0.007720407309832795,
            0.0038216934505308493,
            0.0038216934505308493,
            0.0038216934505308493,
            0.006601361044015785,
            0.006601361044015785,
            0.006601361044015785,
            0.013335762462053475,
            0.013335762462053475,
            0.013335762462053475,
            0.015850632352651335,
            0.015850632352651335,
            0.015850632352651335,
            0.013335762462053475,
            0.013335762462053475,
            0.013335762462053475,
            0.006601361044015785,
            0.006601361044015785,
            0.006601361044015785,
            0.005780502143788567,
            0.005780502143788567,
            0.005780502143788567,
            0.011677501501123906,
            0.011677501501123906,
            0.011677501501123906,
            0.013879655071731656,
            0.013879655071731656,
            0.013879655071731656,
            0.011677501501123906,
            0.011677501501123906,
            0.011677501501123906,
            0.005780502143788567,
            0.005780502143788567,
            0.005780502143788567,
            0.002918499727387944,
            0.002918499727387944,
            0.002918499727387944,
            0.0058958173701611554,
            0.0058958173701611554,
            0.0058958173701611554,
            0.007007655829107358,
            0.007007655829107358,
            0.007007655829107358,
            0.0058958173701611554,
            0.0058958173701611554,
            0.0058958173701611554,
            0.002918499727387944,
            0.002918499727387944,
            0.002918499727387944,
            0.0006218507222926128,
            0.0006218507222926128,
            0.0006218507222926128,
            0.00125623389844254,
            0.00125623389844254,
            0.00125623389844254,
            0.0014931355990937861,
            0.0014931355990937861,
            0.0014931355990937861,
            0.00125623389844254,
            0.00125623389844254,
            0.00125623389844254,
            0.0006218507222926128,
            0.0006218507222926128,
            0.0006218507222926128,
        ),
    ),
    10: (
        (
            (0.9379082062257552, 0.03277536661445989, 0.029316427159784893),
            (0.03277536661445989, 0.029316427159784893, 0.9379082062257552),
            (0.029316427159784893, 0.9379082062257552, 0.03277536661445989),
            (0.8062543312453877, 0.16442924159482744, 0.029316427159784893),
            (0.16442924159482744, 0.029316427159784893, 0.8062543312453877),
            (0.029316427159784893, 0.8062543312453877, 0.16442924159482744),
            (0.6011536484678384, 0.3695299243723767, 0.029316427159784893),
            (0.3695299243723767, 0.029316427159784893, 0.6011536484678384),
            (0.029316427159784893, 0.6011536484678384, 0.3695299243723767),
            (0.3695299243723767, 0.6011536484678384, 0.029316427159784893),
            (0.6011536484678384, 0.029316427159784893, 0.3695299243723767),
            (0.029316427159784893, 0.3695299243723767, 0.6011536484678384),
            (0.16442924159482744, 0.8062543312453877, 0.029316427159784893),
            (0.8062543312453877, 0.029316427159784893, 0.16442924159482744),
            (0.029316427159784893, 0.16442924159482744, 0.8062543312453877),
            (0.03277536661445989, 0.9379082062257552, 0.029316427159784893),
            (0.9379082062257552, 0.029316427159784893, 0.03277536661445989),
            (0.029316427159784893, 0.03277536661445989, 0.9379082062257552),
            (0.8231560673189566, 0.028765333012559128, 0.1480785996684843),
            (0.028765333012559128, 0.1480785996684843, 0.8231560673189566),
            (0.1480785996684843, 0.8231560673189566, 0.028765333012559128),
            (0.707609913381099, 0.14431148695041665, 0.1480785996684843),
            (0.14431148695041665, 0.1480785996684843, 0.707609913381099),
            (0.1480785996684843, 0.707609913381099, 0.14431148695041665),
            (0.5276030957427397, 0.32431830458877603, 0.1480785996684843),
            (0.32431830458877603, 0.1480785996684843, 0.5276030957427397),
            (0.1480785996684843, 0.5276030957427397, 0.32431830458877603),
            (0.32431830458877603, 0.5276030957427397, 0.1480785996684843),
            (0.5276030957427397, 0.1480785996684843, 0.32431830458877603),
            (0.1480785996684843, 0.32431830458877603, 0.5276030957427397),
            (0.14431148695041665, 0.707609913381099, 0.1480785996684843),
            (0.707609913381099, 0.1480785996684843, 0.14431148695041665),
            (0.1480785996684843, 0.14431148695041665, 0.707609913381099),
            (0.028765333012559128, 0.8231560673189566, 0.1480785996684843),
            (0.8231560673189566, 0.1480785996684843, 0.028765333012559128),
            (0.1480785996684843, 0.028765333012559128, 0.8231560673189566),
            (0.640628436740815, 0.022386872978030634, 0.3369846902811543),
            (0.022386872978030634, 0.3369846902811543, 0.640628436740815),
            (0.3369846902811543, 0.640628436740815, 0.022386872978030634),
            (0.550703627937892, 0.1123116817809537, 0.3369846902811543),
            (0.1123116817809537, 0.3369846902811543, 0.550703627937892),
            (0.3369846902811543, 0.550703627937892, 0.1123116817809537),
            (0.41061174164232767, 0.25240356807651804, 0.3369846902811543),
            (0.25240356807651804, 0.3369846902811543, 0.41061174164232767),
            (0.3369846902811543, 0.41061174164232767, 0.25240356807651804),
            (0.25240356807651804, 0.41061174164232767, 0.3369846902811543),
            (0.41061174164232767, 0.3369846902811543, 0.25240356807651804),
            (0.3369846902811543, 0.25240356807651804, 0.41061174164232767),
            (0.1123116817809537, 0.550703627937892, 0.3369846902811543),
            (0.550703627937892, 0.3369846902811543, 0.1123116817809537),
            (0.3369846902811543, 0.1123116817809537, 0.550703627937892),
            (0.022386872978030634, 0.640628436740815, 0.3369846902811543),
            (0.640628436740815, 0.3369846902811543, 0.022386872978030634),
            (0.3369846902811543, 0.022386872978030634, 0.640628436740815),
            (0.4264269178617787, 0.01490156336667116, 0.5586715187715501),
            (0.01490156336667116, 0.5586715187715501, 0.4264269178617787),
            (0.5586715187715501, 0.4264269178617787, 0.01490156336667116),
            (0.3665695077658008, 0.07475897346264909, 0.5586715187715501),
            (0.07475897346264909, 0.5586715187715501, 0.3665695077658008),
            (0.5586715187715501, 0.3665695077658008, 0.07475897346264909),
            (0.27331896210725803, 0.16800951912119186, 0.5586715187715501),
            (0.16800951912119186, 0.5586715187715501, 0.27331896210725803),
            (0.5586715187715501, 0.27331896210725803, 0.16800951912119186),
            (0.16800951912119186, 0.27331896210725803, 0.5586715187715501),
            (0.27331896210725803, 0.5586715187715501, 0.16800951912119186),
            (0.5586715187715501, 0.16800951912119186, 0.27331896210725803),
            (0.07475897346264909, 0.3665695077658008, 0.5586715187715501),
            (0.3665695077658008, 0.5586715187715501, 0.07475897346264909),
            (0.5586715187715501, 0.07475897346264909, 0.3665695077658008),
            (0.01490156336667116, 0.4264269178617787, 0.5586715187715501),
            (0.4264269178617787, 0.5586715187715501, 0.01490156336667116),
            (0.5586715187715501, 0.01490156336667116, 0.4264269178617787),
            (0.22297426326865907, 0.007791874701286432, 0.7692338620300545),
            (0.007791874701286432, 0.7692338620300545, 0.22297426326865907),
            (0.7692338620300545, 0.22297426326865907, 0.007791874701286432),
            (0.19167543723712124, 0.039090700732824245, 0.7692338620300545),
            (0.039090700732824245, 0.7692338620300545, 0.19167543723712124),
            (0.7692338620300545, 0.19167543723712124, 0.039090700732824245),
            (0.1429156829939483, 0.0878504549759972, 0.7692338620300545),
            (0.0878504549759972, 0.7692338620300545, 0.1429156829939483),
            (0.7692338620300545, 0.1429156829939483, 0.0878504549759972),
            (0.0878504549759972, 0.1429156829939483, 0.7692338620300545),
            (0.1429156829939483, 0.7692338620300545, 0.0878504549759972),
            (0.7692338620300545, 0.0878504549759972, 0.1429156829939483),
            (0.039090700732824245, 0.19167543723712124, 0.7692338620300545),
            (0.19167543723712124, 0.7692338620300545, 0.039090700732824245),
            (0.7692338620300545, 0.039090700732824245, 0.19167543723712124),
            (0.007791874701286432, 0.22297426326865907, 0.7692338620300545),
            (0.22297426326865907, 0.7692338620300545, 0.007791874701286432),
            (0.7692338620300545, 0.007791874701286432, 0.22297426326865907),
            (0.07058763152758864, 0.002466697152670243, 0.9269456713197411),
            (0.002466697152670243, 0.9269456713197411, 0.07058763152758864),
            (0.9269456713197411, 0.07058763152758864, 0.002466697152670243),
            (0.060679268262818845, 0.012375060417440038, 0.9269456713197411),
            (0.012375060417440038, 0.9269456713197411, 0.060679268262818845),
            (0.9269456713197411, 0.060679268262818845, 0.012375060417440038),
            (0.0452432465648983, 0.02781108211536058, 0.9269456713197411),
            (0.02781108211536058, 0.9269456713197411, 0.0452432465648983),
            (0.9269456713197411, 0.0452432465648983, 0.02781108211536058),
            (0.02781108211536058, 0.0452432465648983, 0.9269456713197411),
            (0.0452432465648983, 0.9269456713197411, 0.02781108211536058),
            (0.9269456713197411, 0.02781108211536058, 0.0452432465648983),
            (0.012375060417440038, 0.060679268262818845, 0.9269456713197411),
            (0.060679268262818845, 0.9269456713197411, 0.012375060417440038),
            (0.9269456713197411, 0.012375060417440038, 0.060679268262818845),
            (0.002466697152670243, 0.07058763152758864, 0.9269456713197411),
            (0.07058763152758864, 0.9269456713197411, 0.002466697152670243),
            (0.9269456713197411, 0.002466697152670243, 0.07058763152758864),
        ),
        (
            0.00206475511755295,
            0.00206475511755295,
            0.00206475511755295,
            0.00434779811002761,
            0.00434779811002761,
            0.00434779811002761,
            0.00563916856000422,
            0.00563916856000422,
            0.00563916856000422,
            0.00563916856000422,
            0.00563916856000422,
            0.00563916856000422,
            0.00434779811002761,
            0.00434779811002761,
            0.00434779811002761,
            0.00206475511755295,
            0.00206475511755295,
            0.00206475511755295,
            0.0038702915889991716,
            0.0038702915889991716,
            0.0038702915889991716,
            0.008149754086019272,
            0.008149754086019272,
            0.008149754086019272,
            0.010570370530234659,
            0.010570370530234659,
            0.010570370530234659,
            0.010570370530234659,
            0.010570370530234659,
            0.010570370530234659,
            0.008149754086019272,
            0.008149754086019272,
            0.008149754086019272,
            0.0038702915889991716,
            0.0038702915889991716,
            0.0038702915889991716,
            0.004020202134755037,
            0.004020202134755037,
            0.004020202134755037,
            0.008465423863015886,
            0.008465423863015886,
            0.008465423863015886,
            0.010979799633595567,
            0.010979799633595567,
            0.010979799633595567,
            0.010979799633595567,
            0.010979799633595567,
            0.010979799633595567,
            0.008465423863015886,
            0.008465423863015886,
            0.008465423863015886,
            0.004020202134755037,
            0.004020202134755037,
            0.004020202134755037,
            0.0028171785989810406,
            0.0028171785989810406,
            0.0028171785989810406,
            0.005932191999008759,
            0.005932191999008759,
            0.005932191999008759,
            0.007694154550452744,
            0.007694154550452744,
            0.007694154550452744,
            0.007694154550452744,
            0.007694154550452744,
            0.007694154550452744,
            0.005932191999008759,
            0.005932191999008759,
            0.005932191999008759,
            0.0028171785989810406,
            0.0028171785989810406,
            0.0028171785989810406,
            0.0012550994042305576,
            0.0012550994042305576,
            0.0012550994042305576,
            0.002642889111265495,
            0.002642889111265495,
            0.002642889111265495,
            0.0034278724095887767,
            0.0034278724095887767,
            0.0034278724095887767,
            0.0034278724095887767,
            0.0034278724095887767,
            0.0034278724095887767,
            0.002642889111265495,
            0.002642889111265495,
            0.002642889111265495,
            0.0012550994042305576,
            0.0012550994042305576,
            0.0012550994042305576,
            0.00024951418707877277,
            0.00024951418707877277,
            0.00024951418707877277,
            0.0005254072513411962,
            0.0005254072513411962,
            0.0005254072513411962,
            0.0006814621971816196,
            0.0006814621971816196,
            0.0006814621971816196,
            0.0006814621971816196,
            0.0006814621971816196,
            0.0006814621971816196,
            0.0005254072513411962,
            0.0005254072513411962,
            0.0005254072513411962,
            0.00024951418707877277,
            0.00024951418707877277,
            0.00024951418707877277,
        ),
    ),
    12: (
        (
            (0.9526465811852267, 0.024874032376060756, 0.022479386438712497),
            (0.024874032376060756, 0.022479386438712497, 0.9526465811852267),
            (0.022479386438712497, 0.9526465811852267, 0.024874032376060756),
            (0.8511913165416183, 0.12632929701966925, 0.022479386438712497),
            (0.12632929701966925, 0.022479386438712497, 0.8511913165416183),
            (0.022479386438712497, 0.8511913165416183, 0.12632929701966925),
            (0.6871213074732971, 0.2903993060879903, 0.022479386438712497),
            (0.2903993060879903, 0.022479386438712497, 0.6871213074732971),
            (0.022479386438712497, 0.6871213074732971, 0.2903993060879903),
            (0.48876030678064375, 0.48876030678064375, 0.022479386438712497),
            (0.48876030678064375, 0.022479386438712497, 0.48876030678064375),
            (0.022479386438712497, 0.48876030678064375, 0.48876030678064375),
            (0.2903993060879903, 0.6871213074732971, 0.022479386438712497),
            (0.6871213074732971, 0.022479386438712497, 0.2903993060879903),
            (0.022479386438712497, 0.2903993060879903, 0.6871213074732971),
            (0.12632929701966925, 0.8511913165416183, 0.022479386438712497),
            (0.8511913165416183, 0.022479386438712497, 0.12632929701966925),
            (0.022479386438712497, 0.12632929701966925, 0.8511913165416183),
            (0.024874032376060756, 0.9526465811852267, 0.022479386438712497),
            (0.9526465811852267, 0.022479386438712497, 0.024874032376060756),
            (0.022479386438712497, 0.024874032376060756, 0.9526465811852267),
            (0.8627930312234321, 0.02252791561566364, 0.11467905316090424),
            (0.02252791561566364, 0.11467905316090424, 0.8627930312234321),
            (0.11467905316090424, 0.8627930312234321, 0.02252791561566364),
            (0.7709070190923345, 0.11441392774676132, 0.11467905316090424),
            (0.11441392774676132, 0.11467905316090424, 0.7709070190923345),
            (0.11467905316090424, 0.7709070190923345, 0.11441392774676132),
            (0.6223120802632945, 0.2630088665758012, 0.11467905316090424),
            (0.2630088665758012, 0.11467905316090424, 0.6223120802632945),
            (0.11467905316090424, 0.6223120802632945, 0.2630088665758012),
            (0.4426604734195479, 0.4426604734195479, 0.11467905316090424),
            (0.4426604734195479, 0.11467905316090424, 0.4426604734195479),
            (0.11467905316090424, 0.4426604734195479, 0.4426604734195479),
            (0.2630088665758012, 0.6223120802632945, 0.11467905316090424),
            (0.6223120802632945, 0.11467905316090424, 0.2630088665758012),
            (0.11467905316090424, 0.2630088665758012, 0.6223120802632945),
            (0.11441392774676132, 0.7709070190923345, 0.11467905316090424),
            (0.7709070190923345, 0.11467905316090424, 0.11441392774676132),
            (0.11467905316090424, 0.11441392774676132, 0.7709070190923345),
            (0.02252791561566364, 0.8627930312234321, 0.11467905316090424),
            (0.8627930312234321, 0.11467905316090424, 0.02252791561566364),
            (0.11467905316090424, 0.02252791561566364, 0.8627930312234321),
            (0.7155274328665678, 0.018682744348842737, 0.26578982278458946),
            (0.018682744348842737, 0.26578982278458946, 0.7155274328665678),
            (0.26578982278458946, 0.7155274328665678, 0.018682744348842737),
            (0.6393249602025477, 0.09488521701286283, 0.26578982278458946),
            (0.09488521701286283, 0.26578982278458946, 0.6393249602025477),
            (0.26578982278458946, 0.6393249602025477, 0.09488521701286283),
            (0.5160929088651122, 0.21811726835029832, 0.26578982278458946),
            (0.21811726835029832, 0.26578982278458946, 0.5160929088651122),
            (0.26578982278458946, 0.5160929088651122, 0.21811726835029832),
            (0.36710508860770524, 0.36710508860770524, 0.26578982278458946),
            (0.36710508860770524, 0.26578982278458946, 0.36710508860770524),
            (0.26578982278458946, 0.36710508860770524, 0.36710508860770524),
            (0.21811726835029832, 0.5160929088651122, 0.26578982278458946),
            (0.5160929088651122, 0.26578982278458946, 0.21811726835029832),
            (0.26578982278458946, 0.21811726835029832, 0.5160929088651122),
            (0.09488521701286283, 0.6393249602025477, 0.26578982278458946),
            (0.6393249602025477, 0.26578982278458946, 0.09488521701286283),
            (0.26578982278458946, 0.09488521701286283, 0.6393249602025477),
            (0.018682744348842737, 0.7155274328665678, 0.26578982278458946),
            (0.7155274328665678, 0.26578982278458946, 0.018682744348842737),
            (0.26578982278458946, 0.018682744348842737, 0.7155274328665678),
            (0.5332307311739592, 0.013922895156596086, 0.45284637366944464),
            (0.013922895156596086, 0.45284637366944464, 0.5332307311739592),
            (0.45284637366944464, 0.5332307311739592, 0.013922895156596086),
            (0.47644255178423006, 0.0707110745463253, 0.45284637366944464),
            (0.0707110745463253, 0.45284637366944464, 0.47644255178423006),
            (0.45284637366944464, 0.47644255178423006, 0.0707110745463253),
            (0.3846066363176857, 0.16254699001286965, 0.45284637366944464),
            (0.16254699001286965, 0.45284637366944464, 0.3846066363176857),
            (0.45284637366944464, 0.3846066363176857, 0.16254699001286965),
            (0.2735768131652777, 0.2735768131652777, 0.45284637366944464),
            (0.2735768131652777, 0.45284637366944464, 0.2735768131652777),
            (0.45284637366944464, 0.2735768131652777, 0.2735768131652777),
            (0.16254699001286965, 0.3846066363176857, 0.45284637366944464),
            (0.3846066363176857, 0.45284637366944464, 0.16254699001286965),
            (0.45284637366944464, 0.16254699001286965, 0.3846066363176857),
            (0.0707110745463253, 0.47644255178423006, 0.45284637366944464),
            (0.47644255178423006, 0.45284637366944464, 0.0707110745463253),
            (0.45284637366944464, 0.0707110745463253, 0.47644255178423006),
            (0.013922895156596086, 0.5332307311739592, 0.45284637366944464),
            (0.5332307311739592, 0.45284637366944464, 0.013922895156596086),
            (0.45284637366944464, 0.013922895156596086, 0.5332307311739592),
            (0.34365181310645293, 0.008972904006716704, 0.6473752828868303),
            (0.008972904006716704, 0.6473752828868303, 0.34365181310645293),
            (0.6473752828868303, 0.34365181310645293, 0.008972904006716704),
            (0.3070534708328747, 0.04557124628029494, 0.6473752828868303),
            (0.04557124628029494, 0.6473752828868303, 0.3070534708328747),
            (0.6473752828868303, 0.3070534708328747, 0.04557124628029494),
            (0.2478678744046879, 0.10475684270848172, 0.6473752828868303),
            (0.10475684270848172, 0.6473752828868303, 0.2478678744046879),
            (0.6473752828868303, 0.2478678744046879, 0.10475684270848172),
            (0.1763123585565848, 0.1763123585565848, 0.6473752828868303),
            (0.1763123585565848, 0.6473752828868303, 0.1763123585565848),
            (0.6473752828868303, 0.1763123585565848, 0.1763123585565848),
            (0.10475684270848172, 0.2478678744046879, 0.6473752828868303),
            (0.2478678744046879, 0.6473752828868303, 0.10475684270848172),
            (0.6473752828868303, 0.10475684270848172, 0.2478678744046879),
            (0.04557124628029494, 0.3070534708328747, 0.6473752828868303),
            (0.3070534708328747, 0.6473752828868303, 0.04557124628029494),
            (0.6473752828868303, 0.04557124628029494, 0.3070534708328747),
            (0.008972904006716704, 0.34365181310645293, 0.6473752828868303),
            (0.34365181310645293, 0.6473752828868303, 0.008972904006716704),
            (0.6473752828868303, 0.008972904006716704, 0.34365181310645293),
            (0.17565427919525448, 0.004586412541637883, 0.8197593082631076),
            (0.004586412541637883, 0.8197593082631076, 0.17565427919525448),
            (0.8197593082631076, 0.17565427919525448, 0.004586412541637883),
            (0.15694739278690256, 0.023293298949989796, 0.8197593082631076),
            (0.023293298949989796, 0.8197593082631076, 0.15694739278690256),
            (0.8197593082631076, 0.15694739278690256, 0.023293298949989796),
            (0.12669525127960912, 0.05354544045728325, 0.8197593082631076),
            (0.05354544045728325, 0.8197593082631076, 0.12669525127960912),
            (0.8197593082631076, 0.12669525127960912, 0.05354544045728325),
            (0.09012034586844618, 0.09012034586844618, 0.8197593082631076),
            (0.09012034586844618, 0.8197593082631076, 0.09012034586844618),
            (0.8197593082631076, 0.09012034586844618, 0.09012034586844618),
            (0.05354544045728325, 0.12669525127960912, 0.8197593082631076),
            (0.12669525127960912, 0.8197593082631076, 0.05354544045728325),
            (0.8197593082631076, 0.05354544045728325, 0.12669525127960912),
            (0.023293298949989796, 0.15694739278690256, 0.8197593082631076),
            (0.15694739278690256, 0.8197593082631076, 0.023293298949989796),
            (0.8197593082631076, 0.023293298949989796, 0.15694739278690256),
            (0.004586412541637883, 0.17565427919525448, 0.8197593082631076),
            (0.17565427919525448, 0.8197593082631076, 0.004586412541637883),
            (0.8197593082631076, 0.004586412541637883, 0.17565427919525448),
            (0.0548309009555892, 0.0014316595813329484, 0.9437374394630779),
            (0.0014316595813329484, 0.9437374394630779, 0.0548309009555892),
            (0.9437374394630779, 0.0548309009555892, 0.0014316595813329484),
            (0.04899150187836186, 0.007271058658560282, 0.9437374394630779),
            (0.007271058658560282, 0.9437374394630779, 0.04899150187836186),
            (0.9437374394630779, 0.04899150187836186, 0.007271058658560282),
            (0.039548223967454645, 0.016714336569467504, 0.9437374394630779),
            (0.016714336569467504, 0.9437374394630779, 0.039548223967454645),
            (0.9437374394630779, 0.039548223967454645, 0.016714336569467504),
            (0.028131280268461074, 0.028131280268461074, 0.9437374394630779),
            (0.028131280268461074, 0.9437374394630779, 0.028131280268461074),
            (0.9437374394630779, 0.028131280268461074, 0.028131280268461074),
            (0.016714336569467504, 0.039548223967454645, 0.9437374394630779),
            (0.039548223967454645, 0.9437374394630779, 0.016714336569467504),
            (0.9437374394630779, 0.016714336569467504, 0.039548223967454645),
            (0.007271058658560282, 0.04899150187836186, 0.9437374394630779),
            (0.04899150187836186, 0.9437374394630779, 0.007271058658560282),
            (0.9437374394630779, 0.007271058658560282, 0.04899150187836186),
            (0.0014316595813329484, 0.0548309009555892, 0.9437374394630779),
            (0.0548309009555892, 0.9437374394630779, 0.0014316595813329484),
            (0.9437374394630779, 0.0014316595813329484, 0.0548309009555892),
        ),
        (
            0.0012078220265752623,
            0.0012078220265752623,
            0.0012078220265752623,
            0.0026090622161650313,
            0.0026090622161650313,
            0.0026090622161650313,
            0.0035616702004383225,
            0.0035616702004383225,
            0.0035616702004383225,
            0.0038986789214731183,
            0.0038986789214731183,
            0.0038986789214731183,
            0.0035616702004383225,
            0.0035616702004383225,
            0.0035616702004383225,
            0.0026090622161650313,
            0.0026090622161650313,
            0.0026090622161650313,
            0.0012078220265752623,
            0.0012078220265752623,
            0.0012078220265752623,
            0.002384881259698714,
            0.002384881259698714,
            0.002384881259698714,
            0.00515167255424469,
            0.00515167255424469,
            0.00515167255424469,
            0.007032625939384147,
            0.007032625939384147,
            0.007032625939384147,
            0.007698059890303101,
            0.007698059890303101,
            0.007698059890303101,
            0.007032625939384147,
            0.007032625939384147,
            0.007032625939384147,
            0.00515167255424469,
            0.00515167255424469,
            0.00515167255424469,
            0.002384881259698714,
            0.002384881259698714,
            0.002384881259698714,
            0.002749201004509858,
            0.002749201004509858,
            0.002749201004509858,
            0.005938653466891932,
            0.005938653466891932,
            0.005938653466891932,
            0.008106945458299038,
            0.008106945458299038,
            0.008106945458299038,
            0.008874032573794452,
            0.008874032573794452,
            0.008874032573794452,
            0.008106945458299038,
            0.008106945458299038,
            0.008106945458299038,
            0.005938653466891932,
            0.005938653466891932,
            0.005938653466891932,
            0.002749201004509858,
            0.002749201004509858,
            0.002749201004509858,
            0.002311847584578024,
            0.002311847584578024,
            0.002311847584578024,
            0.004993909739796471,
            0.004993909739796471,
            0.004993909739796471,
            0.0068172615408366045,
            0.0068172615408366045,
            0.0068172615408366045,
            0.007462317501535689,
            0.007462317501535689,
            0.007462317501535689,
            0.0068172615408366045,
            0.0068172615408366045,
            0.0068172615408366045,
            0.004993909739796471,
            0.004993909739796471,
            0.004993909739796471,
            0.002311847584578024,
            0.002311847584578024,
            0.002311847584578024,
            0.0014326366959941412,
            0.0014326366959941412,
            0.0014326366959941412,
            0.003094692918962849,
            0.003094692918962849,
            0.003094692918962849,
            0.0042246120006976,
            0.0042246120006976,
            0.0042246120006976,
            0.004624348923854644,
            0.004624348923854644,
            0.004624348923854644,
            0.0042246120006976,
            0.0042246120006976,
            0.0042246120006976,
            0.003094692918962849,
            0.003094692918962849,
            0.003094692918962849,
            0.0014326366959941412,
            0.0014326366959941412,
            0.0014326366959941412,
            0.0005914950238126832,
            0.0005914950238126832,
            0.0005914950238126832,
            0.001277710857828228,
            0.001277710857828228,
            0.001277710857828228,
            0.0017442223718958775,
            0.0017442223718958775,
            0.0017442223718958775,
            0.001909262400217581,
            0.001909262400217581,
            0.001909262400217581,
            0.0017442223718958775,
            0.0017442223718958775,
            0.0017442223718958775,
            0.001277710857828228,
            0.001277710857828228,
            0.001277710857828228,
            0.0005914950238126832,
            0.0005914950238126832,
            0.0005914950238126832,
            0.00011253025223712493,
            0.00011253025223712493,
            0.00011253025223712493,
            0.00024308087021718868,
            0.00024308087021718868,
            0.00024308087021718868,
            0.0003318333638749891,
            0.0003318333638749891,
            0.0003318333638749891,
            0.00036323176161052936,
            0.00036323176161052936,
            0.00036323176161052936,
            0.0003318333638749891,
            0.0003318333638749891,
            0.0003318333638749891,
            0.00024308087021718868,
            0.00024308087021718868,
            0.00024308087021718868,
            0.00011253025223712493,
            0.00011253025223712493,
            0.00011253025223712493,
        ),
    ),
}

EDGE_TABLES = {
    1: (
        (0.5,),
        (1.0,),
    ),
    2: (
        (0.2113248654051871, 0.7886751345948129),
        (0.5, 0.5),
    ),
    3: (
        (0.11270166537925831, 0.5, 0.8872983346207417),
        (0.2777777777777778, 0.4444444444444444, 0.2777777777777778),
    ),
    4: (
        (0.06943184420297371, 0.33000947820757187, 0.6699905217924281, 0.9305681557970263),
        (0.17392742256872692, 0.32607257743127305, 0.32607257743127305, 0.17392742256872692),
    ),
    5: (
        (0.046910077030668004, 0.23076534494715845, 0.5, 0.7692346550528415, 0.953089922969332),
        (0.11846344252809454, 0.23931433524968324, 0.28444444444444444, 0.23931433524968324, 0.11846344252809454),
    ),
    6: (
        (0.03376524289842399, 0.16939530676686773, 0.38069040695840156, 0.6193095930415985, 0.8306046932331322, 0.966234757101576),
        (0.08566224618958518, 0.1803807865240693, 0.23395696728634552, 0.23395696728634552, 0.1803807865240693, 0.08566224618958518),
    ),
}
