"""Frozen Chebyshev tables for the Airy mid-range zones.

Generated by tools/gen_airy_coeffs.py -- do not edit by hand.
"""

AIRY_POS_XLO = 2.0
AIRY_POS_XHI = 15.5
AIRY_POS_RLO = 0.0245806697419723549
AIRY_POS_RHI = 0.5303300858899106433
AIRY_NEG_YLO = 3.0
AIRY_NEG_YHI = 13.0
AIRY_NEG_RLO = 0.03200193439760937242
AIRY_NEG_RHI = 0.2886751345948128823

AIRY_FA = (
    0.9836484666218646814,
    -0.01396118116264526920,
    0.0006486512131825099344,
    -0.00005059261919364013048,
    5.242133316567062064e-6,
    -6.553892394653497439e-7,
    9.394056948067641570e-8,
    -1.496358246655555680e-8,
    2.594494846676958551e-9,
    -4.825668299793123301e-10,
    9.525020159338593879e-11,
    -1.978798406484476417e-11,
    4.298903543441548234e-12,
    -9.715882883458658968e-13,
    2.274754443906797647e-13,
    -5.497766186289020591e-14,
    1.367576863238587037e-14,
    -3.492501473619913785e-15,
    9.136921891201360862e-16,
    -2.444136560275131868e-16,
    6.674205689601795454e-17,
    -1.857778033410941699e-17,
    5.264428684341410109e-18,
    -1.516964631980468669e-18,
)

AIRY_FAP = (
    1.023470711805820990,
    0.02025007953078261819,
    -0.0007917843795205392643,
    0.00005826626360978670056,
    -5.860433677873889703e-6,
    7.194476532225217257e-7,
    -1.018483978325042980e-7,
    1.607674322294192782e-8,
    -2.768226621179498040e-9,
    5.120559002859185084e-10,
    -1.006189829945310936e-10,
    2.082552704740279213e-11,
    -4.510039633679952082e-12,
    1.016543660147863704e-12,
    -2.374393702770693242e-13,
    5.726680866911504350e-14,
    -1.421899414095963805e-14,
    3.625258358992551542e-15,
    -9.470195064386351531e-16,
    2.529891340852091183e-16,
    -6.899943105633979522e-17,
    1.918467189140909940e-17,
    -5.430824197103348210e-18,
    1.563429818332383004e-18,
)

AIRY_NEG_P = (
    0.9988313221502099097,
    -0.001389479011719519046,
    -0.0002478158813095249708,
    0.00001141230123265357662,
    3.331895810407266209e-7,
    -1.147906123205158629e-7,
    1.025331094221483340e-8,
    1.105168339366664363e-10,
    -1.979173052600593084e-10,
    3.621778623148575891e-11,
    -3.074725153920926043e-12,
    -2.566959478436113920e-13,
    1.580309332329561160e-13,
    -3.450511167881139483e-14,
    4.284186100352158820e-15,
    2.877213942616843507e-17,
    -1.852430088480358305e-16,
    6.012643174405594164e-17,
    -1.217018576612153092e-17,
    1.430418722891559010e-18,
)

AIRY_NEG_Q = (
    0.01087055686894589972,
    0.008544427649736396143,
    -0.0001167583412839626507,
    -0.00001054977678818091603,
    1.174348452363061619e-6,
    -3.091171852737350994e-8,
    -8.817612521221211468e-9,
    1.728946915472141311e-9,
    -1.426455381130294467e-10,
    -8.158309892421224527e-12,
    5.186414592541275973e-12,
    -1.002841215787564645e-12,
    9.905143345339429168e-14,
    6.190563063950545426e-15,
    -5.333791683876701910e-15,
    1.380447215222022848e-15,
    -2.195347245092060850e-16,
    1.256588418802487020e-17,
    5.772386740634400460e-18,
    -2.662790917316449818e-18,
)

AIRY_NEG_R = (
    1.001389259206438075,
    0.001654275743038974779,
    0.0002978410355198568390,
    -0.00001258001282876443664,
    -3.915281031924380316e-7,
    1.243206401800112306e-7,
    -1.075256255726677983e-8,
    -1.490966534821972430e-10,
    2.105735299089688854e-10,
    -3.775949703451975802e-11,
    3.121723400093526965e-12,
    2.823016831585744461e-13,
    -1.652934728500360800e-13,
    3.560126406757086074e-14,
    -4.348813753777227151e-15,
    -4.823493755049225973e-17,
    1.935123108083075415e-16,
    -6.195864270245414010e-17,
    1.242281243842863658e-17,
    -1.434879275538462688e-18,
)

AIRY_NEG_S = (
    0.01529151265987482459,
    0.01206317688928966489,
    -0.0001318762236489139725,
    -0.00001215437211392292798,
    1.278392861316390712e-6,
    -3.088187251463691693e-8,
    -9.599411978173552127e-9,
    1.826133552075645168e-9,
    -1.464479862934510852e-10,
    -9.147068417984722911e-12,
    5.456335089187429671e-12,
    -1.038274945026552962e-12,
    1.003252139469091446e-13,
    6.898991674564357440e-15,
    -5.566035745721438165e-15,
    1.422397615251484020e-15,
    -2.235167800471697932e-16,
    1.215210356443399347e-17,
    6.076432948635911060e-18,
    -2.748018835375578499e-18,
)

