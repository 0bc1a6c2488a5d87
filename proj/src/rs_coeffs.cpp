// Generated by tools/gen_rs_tables.py. Do not edit by hand.
//
// Chebyshev coefficients (argument z = 2p - 1) of the Riemann-Siegel
// correction functions C_0..C_12 on p in [0,1], and envelope constants
// K_J with |Z_J(t) - Z(t)| <= K_J (t/2pi)^(-(2J+3)/4) observed on [7, 1e4].

#include "zetaderiv/rs_coeffs.hpp"

namespace zetaderiv::rs_tables {

static const double kC0[] = {
    0.6426672862397684,
    3.810754429395723e-36,
    0.27197299999785507,
    8.606171443572444e-38,
    0.010738605819340285,
    -2.8862448899822557e-37,
    -0.0013743815296336614,
    6.908149155357078e-38,
    -0.00012468221880320676,
    -1.2729758119115466e-38,
    -5.764599706783048e-07,
    2.4564123160267804e-39,
    2.728067429580452e-07,
    -4.924229376683764e-40,
    8.07795305950047e-09,
    9.513867408337677e-41,
    -2.0884608068869654e-10,
    -1.6007509442611505e-41,
    -1.3115561854739528e-11,
    2.0328775803722202e-42,
    -1.4207987228087186e-14,
    -1.3545636768615536e-43,
    1.0271701357931162e-14,
    -1.0114898712044124e-44,
    1.3974598819518373e-16,
    3.7123626976750736e-45,
    -4.4841187339522885e-18,
    -3.584700040153495e-46,
    -1.1830599573845289e-19,
};

static const double kC1[] = {
    7.419401292795266e-34,
    0.010697913921003001,
    3.549731351694968e-35,
    0.017170651243377882,
    -2.970941261696377e-35,
    0.002793211149788471,
    -6.642241089052565e-36,
    -3.6375653719275045e-05,
    -1.2738154591308604e-37,
    -2.7108955231150888e-05,
    5.130216469195461e-37,
    -1.0483749866752774e-06,
    -1.2298806476424102e-37,
    5.886467166527572e-08,
    1.6140590001810727e-38,
    4.322967268502779e-09,
    -3.4701477296201448e-40,
    -1.1369591588273712e-11,
    -4.830179101236098e-40,
    -6.6998339103553274e-12,
    1.4814633003418298e-40,
    -1.0079997652808475e-13,
    -2.426020310689332e-41,
    5.152488009222117e-15,
    2.064432603740551e-42,
    1.521695447183697e-16,
    2.4959346207712737e-44,
    -1.8619464833687103e-18,
    -2.6863703130821784e-44,
    -1.1301846184246265e-19,
};

static const double kC2[] = {
    0.0031461158539889122,
    4.119813395568871e-30,
    -0.0023087838845307503,
    9.320529899729507e-32,
    5.769820766689844e-05,
    -3.1231997423675117e-31,
    0.000352388620236659,
    7.480945661069417e-32,
    2.5246667458684434e-05,
    -1.3782719497017794e-32,
    -3.442821197193136e-06,
    2.6579936289140907e-33,
    -3.535074556622459e-07,
    -5.327312442039736e-34,
    3.730830183792625e-09,
    1.029427437732444e-34,
    1.2776951864116635e-09,
    -1.7326736301980336e-35,
    2.1874616204147057e-11,
    2.2018942923796005e-36,
    -1.914141096461037e-12,
    -1.47060087617394e-37,
    -6.562883102168523e-14,
    -1.0875598787773587e-38,
    1.2586009182411715e-15,
    4.011926374233065e-39,
    8.140076623881463e-17,
};

static const double kC3[] = {
    2.026264054875372e-28,
    7.123256221203874e-05,
    1.3290346378891554e-30,
    0.00023234305298164808,
    -7.998550869137108e-30,
    -0.00012929912045472474,
    -1.396544006941134e-30,
    1.807449641367144e-05,
    -1.632351476439992e-31,
    6.5261851872204395e-06,
    1.6918700572491816e-31,
    -1.1696365378521986e-07,
    -3.943394376672072e-32,
    -7.349476126518126e-08,
    5.4891735465512267e-33,
    -1.7750910077907072e-09,
    -2.7690653043218603e-34,
    2.555552961326525e-10,
    -1.0604564545852624e-34,
    1.13766366005373e-11,
    3.790132003777367e-35,
    -3.349863898530277e-13,
    -6.578178595262319e-36,
    -2.5537379354163893e-14,
    6.020221404600005e-37,
    6.766500771321871e-17,
    -4.351631813688507e-40,
    2.976888471991973e-17,
    -6.836013836435969e-39,
    2.9952208087566915e-19,
};

static const double kC4[] = {
    0.0001676574524669686,
    4.622256650645521e-25,
    -0.00022728768943416726,
    1.0492937387205181e-26,
    6.477387188445696e-05,
    -3.5077865012313916e-26,
    -8.49220050012541e-06,
    8.408791641664971e-27,
    -2.6161407245219076e-06,
    -1.5488475427381439e-27,
    8.336764968733215e-07,
    2.984864247913513e-28,
    6.324704037544833e-08,
    -5.981137152578245e-29,
    -1.0059949403001072e-08,
    1.1559765139277724e-29,
    -7.822677204130333e-10,
    -1.946436260714729e-30,
    3.16765828534986e-11,
    2.475344225508149e-31,
    3.5006944702052894e-12,
    -1.6573554075593104e-32,
    -1.4314814511443748e-14,
    -1.212901362852274e-33,
    -7.269402707921764e-15,
    4.498987634651299e-34,
    -8.780556594835957e-17,
    -4.3596721878018214e-35,
    8.15025447495458e-18,
    -2.2758387312935555e-37,
    1.920839705822086e-19,
};

static const double kC5[] = {
    9.933896560336534e-24,
    8.828845234808902e-05,
    -4.631530449134488e-25,
    -1.562868496932839e-05,
    -3.848204416196092e-25,
    -1.8342447697160084e-07,
    -4.2085204736597906e-26,
    2.1097267874937543e-06,
    -1.612748657867112e-26,
    -6.657016174096388e-07,
    1.0133134107984413e-26,
    2.771474120506843e-08,
    -2.3026478352446695e-27,
    1.8111249375764875e-08,
    3.3741134558171587e-28,
    -5.765890811715977e-10,
    -2.5083640153406256e-29,
    -1.8675033426083153e-10,
    -3.56375876610743e-30,
    -1.1051608917093026e-13,
    1.696240128563031e-30,
    7.870643368056824e-13,
    -3.194460327590626e-31,
    1.445835099565512e-14,
    3.192065791684336e-32,
    -1.5814591908609531e-15,
    -4.788711466528944e-34,
    -4.9106388303637886e-17,
    -3.034932547418157e-34,
    1.6444201220666788e-18,
};

static const double kC6[] = {
    1.218974214106897e-05,
    1.2202941879252892e-20,
    -1.3829760140503787e-05,
    2.7864286470728004e-22,
    5.11096730499826e-06,
    -9.271716591281152e-22,
    -2.0458136450386076e-06,
    2.2243663449198605e-22,
    4.938136644832012e-07,
    -4.0959127787226394e-23,
    -3.6187528349622816e-08,
    7.887161931466492e-24,
    -1.287690509807986e-08,
    -1.5800547332767075e-24,
    2.574412111144866e-09,
    3.05438128715827e-25,
    1.3641457070791684e-10,
    -5.1451330947968724e-26,
    -3.032439574084382e-11,
    6.548184010037704e-27,
    -1.321667123990254e-12,
    -4.395565926063553e-28,
    1.3031652130009373e-13,
    -3.181882062234743e-29,
    6.635883553200665e-15,
    1.1870135606804953e-29,
    -2.460035654793279e-16,
    -1.1522951125304625e-30,
    -1.6815279208168797e-17,
    -5.781664962534598e-33,
    1.8937932080358953e-19,
};

static const double kC7[] = {
    1.292463968014512e-19,
    1.2768657797436977e-05,
    -1.504885765670784e-20,
    -3.862933834641628e-06,
    -4.8813736740542245e-21,
    1.3693830936468824e-06,
    -9.671530635222293e-23,
    -2.7647041682795757e-07,
    -3.4881585508970295e-22,
    1.0283436823349385e-08,
    1.6327747763956214e-22,
    1.1755066568168283e-08,
    -3.6270554418424337e-23,
    -3.055048915846834e-09,
    5.556734601887147e-24,
    1.143044189934386e-10,
    -5.229706644887951e-25,
    5.1308186753607215e-11,
    -1.8417797366981004e-26,
    -2.8355099102521188e-12,
    1.9298786787449444e-26,
    -4.2666541616494827e-13,
    -4.103051668099718e-27,
    1.2763573008520604e-14,
    4.562740330837899e-28,
    1.8569080032450196e-15,
    -1.403593159003733e-29,
    -1.5364287078860227e-17,
    -3.4078196347969586e-30,
    -4.411559038853224e-18,
};

static const double kC8[] = {
    1.2285585087998018e-06,
    9.401148357723411e-17,
    -1.1940986396062382e-06,
    2.1668272053987147e-18,
    -6.099999653884932e-08,
    -7.152384221919027e-18,
    -8.844063913899114e-09,
    1.7172143144466228e-18,
    3.169816317197534e-08,
    -3.160907356566913e-19,
    -1.4200472095896559e-08,
    6.081325263419679e-20,
    3.161410591550041e-09,
    -1.2179521313899753e-20,
    -2.44363152621613e-10,
    2.3548982710522765e-21,
    -4.322631236558795e-11,
    -3.968533388491884e-22,
    9.017681907739575e-12,
    5.054451245992771e-23,
    1.4698907919882343e-13,
    -3.401211833273782e-24,
    -8.703305382441673e-14,
    -2.4361392841584805e-25,
    -8.379770803719948e-16,
    9.138271384477486e-26,
    3.887455068679523e-16,
    -8.884839624018738e-27,
    6.24068507269135e-18,
    -4.3067379081861593e-29,
    -9.229170875896186e-19,
};

static const double kC9[] = {
    4.931604359195943e-16,
    3.020797038571572e-06,
    -1.0361676438806734e-16,
    -7.069522325521037e-07,
    -1.798255120947778e-17,
    2.211652034274786e-07,
    1.9404549826970847e-18,
    -6.51579762246356e-08,
    -2.0436719199267242e-18,
    1.6208733998888843e-08,
    7.841554622570692e-19,
    -2.9485298376243187e-09,
    -1.7072375486569468e-19,
    2.354528710585393e-10,
    2.7177111498737357e-20,
    4.051032332276285e-11,
    -3.002295850241911e-21,
    -1.290663824521201e-11,
    7.288776265975808e-23,
    7.518327897592798e-13,
    5.943379941235287e-23,
    1.2819168061773482e-13,
    -1.5379674696888654e-23,
    -1.1897420892914435e-14,
    1.9501397674964287e-24,
    -7.6260570809932205e-16,
    -9.346932107360415e-26,
    6.033529551278965e-17,
    -1.023452685602599e-26,
    3.1001731047719783e-18,
    1.8558510397758633e-27,
    -1.4656810811879127e-19,
};

static const double kC10[] = {
    6.981156026363565e-08,
    2.1875327103800025e-13,
    5.1876026119154854e-08,
    5.113839644318298e-15,
    -1.502568933263445e-07,
    -1.666666400918425e-14,
    5.385175402317871e-08,
    4.004143598985466e-15,
    -1.200947085101766e-08,
    -7.367702775595995e-16,
    1.8441415770438563e-09,
    1.416181244161215e-16,
    -6.051285185414987e-11,
    -2.8354662021268586e-17,
    -5.891392883842298e-11,
    5.4834404708589635e-18,
    1.6515772781745563e-11,
    -9.244343947281997e-19,
    -1.6489918338442634e-12,
    1.178110380674546e-19,
    -8.450007603826466e-14,
    -7.94343165598e-21,
    3.0235180764067804e-14,
    -5.64003415349177e-22,
    -6.179201926716823e-16,
    2.1250813928697865e-22,
    -2.1506479750200917e-16,
    -2.0682998761549583e-23,
    5.236058744237396e-18,
    -9.823420526160168e-26,
    8.702944244123876e-19,
};

static const double kC11[] = {
    5.212714345476666e-13,
    7.205201309385653e-07,
    -1.7688215426053352e-13,
    -9.524667441520766e-08,
    -1.8069714969179684e-14,
    6.861210335097118e-09,
    5.419820213295241e-15,
    -1.0863062368958498e-09,
    -3.20089381847587e-15,
    5.647875617595771e-10,
    1.0640767081154779e-15,
    -3.030356045370159e-10,
    -2.276103912363454e-16,
    1.0161108538715598e-10,
    3.743813950758833e-17,
    -2.121885978491342e-11,
    -4.641482443119357e-18,
    2.3594343002360924e-12,
    2.858114234075933e-19,
    2.4932082408117506e-14,
    4.210095773735399e-20,
    -4.488701326049016e-14,
    -1.5850867555060065e-20,
    4.093861448448535e-15,
    2.36573673807824e-21,
    2.1624974263394494e-16,
    -1.5692649524925782e-22,
    -4.048496101073904e-17,
    -6.785653479450725e-24,
    -5.797162861446772e-19,
    2.1469211071875233e-24,
    1.8194898140183415e-19,
};

static const double kC12[] = {
    -2.975068994299826e-08,
    1.3782062576922106e-10,
    6.068412017986344e-08,
    3.2882785401983013e-12,
    -4.23946628458077e-08,
    -1.051642869554781e-11,
    1.3932994272099285e-08,
    2.5280113677487314e-12,
    -3.1955941204831106e-09,
    -4.650622341050762e-13,
    7.144263109660308e-10,
    8.932063369217877e-14,
    -1.4989911164671361e-10,
    -1.7878763951197155e-14,
    2.521882128870877e-11,
    3.4579883071379617e-15,
    -2.621225888787525e-12,
    -5.830953291385007e-16,
    -3.00570225312586e-14,
    7.432996830859907e-17,
    6.173114961172452e-14,
    -5.015533806715115e-18,
    -8.704533270265325e-15,
    -3.5484964006357167e-19,
    1.206256188718411e-16,
    1.3391706281900826e-19,
    8.340052973043246e-17,
    -1.3033419068092676e-20,
    -4.9378402091156905e-18,
    -6.245882332631178e-23,
    -3.9127275015254646e-19,
};

const std::span<const double> kCheb[kNumOrders] = {
    {kC0, 29},
    {kC1, 30},
    {kC2, 27},
    {kC3, 30},
    {kC4, 31},
    {kC5, 30},
    {kC6, 31},
    {kC7, 30},
    {kC8, 31},
    {kC9, 32},
    {kC10, 31},
    {kC11, 32},
    {kC12, 31},
};

const double kTruncEnvelope[kNumOrders] = {
    0.03039,
    0.005575,
    0.0005712,
    0.0004815,
    8.225e-05,
    3.575e-05,
    1.272e-05,
    3.333e-06,
    3.14e-06,
    6.962e-07,
    8.475e-07,
    2.372e-07,
    2.591e-07,
};

}  // namespace zetaderiv::rs_tables
