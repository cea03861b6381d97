#ifndef LEHMER_TESTS_REFERENCE_TABLES_HPP
#define LEHMER_TESTS_REFERENCE_TABLES_HPP

// Published reference values, transcribed verbatim.

#include <array>
#include <string_view>

namespace lehmer::reference {

// R1(k)/R2(k) to 64 decimals, k = 1..65.
inline constexpr std::array<std::string_view, 65> kRatio64 = {
    "3.0000000000000000000000000000000000000000000000000000000000000000",
    "3.1428571428571428571428571428571428571428571428571428571428571429",
    "3.1428571428571428571428571428571428571428571428571428571428571429",
    "3.1415929203539823008849557522123893805309734513274336283185840708",
    "3.1415780637940682708449916060436485730274202574146614437604924454",
    "3.1415923909792426870850032900640066997667045522521983609499312078",
    "3.1415928223305272485600354452813469206911829862649534780682321666",
    "3.1415926602118958149513766625165465875475594263879799980191580879",
    "3.1415926517076394721680972516575553164503064392560154252064551018",
    "3.1415926534689505819670665641594107024726895639269814592980636856",
    "3.1415926536097034333101766975356113602136332924145393370409221625",
    "3.1415926535916966575323999453816550421791069920332492792677268321",
    "3.1415926535895974772851022724935990443197089788766137673243522672",
    "3.1415926535897658427283911681357586647531232166551257736863740840",
    "3.1415926535897949563890000604989833119363870525182191538675275264",
    "3.1415926535897936078697175611343357401374657772051447922473642141",
    "3.1415926535897932264519119870605439217503823038833322854025505048",
    "3.1415926535897932337393340424095495278361619490164656674686609330",
    "3.1415926535897932384958871798265432629332247495874217158068559674",
    "3.1415926535897932385202170654790753694551295971907030363946530365",
    "3.1415926535897932384636042752252741477211700998636696041572103108",
    "3.1415926535897932384619738974298389685253003898941919111583795322",
    "3.1415926535897932384626159605817069391563876308322608250338128782",
    "3.1415926535897932384626507820001679085203349744076397007956812907",
    "3.1415926535897932384626438887789785254812134010734664381353470044",
    "3.1415926535897932384626433063420855784182255379975982739476954955",
    "3.1415926535897932384626433753704220177671845520815679347756243018",
    "3.1415926535897932384626433840161803084753395271588726611787867400",
    "3.1415926535897932384626433833921567846462444298200187678535709625",
    "3.1415926535897932384626433832733320575101202334085977160126045251",
    "3.1415926535897932384626433832780011313583089291827528827676225744",
    "3.1415926535897932384626433832795412276163249733207758655099465346",
    "3.1415926535897932384626433832795218564970456013498279015329014616",
    "3.1415926535897932384626433832795028764912658671648025552465258989",
    "3.1415926535897932384626433832795026558970891266009144356105970111",
    "3.1415926535897932384626433832795028788309975635209384389235382620",
    "3.1415926535897932384626433832795028868138180463022120372825783062",
    "3.1415926535897932384626433832795028843242936641656711090281944977",
    "3.1415926535897932384626433832795028841687499915165439348592159580",
    "3.1415926535897932384626433832795028841949606223830792761898241293",
    "3.1415926535897932384626433832795028841974582207305475602005895270",
    "3.1415926535897932384626433832795028841972028735133894452619084772",
    "3.1415926535897932384626433832795028841971667284657301213102341152",
    "3.1415926535897932384626433832795028841971689329076588332348800482",
    "3.1415926535897932384626433832795028841971694203123738376538881191",
    "3.1415926535897932384626433832795028841971694054855024473294830381",
    "3.1415926535897932384626433832795028841971693992698167077733580624",
    "3.1415926535897932384626433832795028841971693992991125354048682206",
    "3.1415926535897932384626433832795028841971693993745498910645297440",
    "3.1415926535897932384626433832795028841971693993760062094244160757",
    "3.1415926535897932384626433832795028841971693993751340966582560562",
    "3.1415926535897932384626433832795028841971693993750956731257005236",
    "3.1415926535897932384626433832795028841971693993751052376002021699",
    "3.1415926535897932384626433832795028841971693993751059289957208672",
    "3.1415926535897932384626433832795028841971693993751058305806275469",
    "3.1415926535897932384626433832795028841971693993751058199065942028",
    "3.1415926535897932384626433832795028841971693993751058208338153750",
    "3.1415926535897932384626433832795028841971693993751058209844036282",
    "3.1415926535897932384626433832795028841971693993751058209768684753",
    "3.1415926535897932384626433832795028841971693993751058209748770310",
    "3.1415926535897932384626433832795028841971693993751058209749198387",
    "3.1415926535897932384626433832795028841971693993751058209749448105",
    "3.1415926535897932384626433832795028841971693993751058209749448952",
    "3.1415926535897932384626433832795028841971693993751058209749445970",
    "3.1415926535897932384626433832795028841971693993751058209749445888",
};

inline constexpr std::string_view kPi64 = "3.1415926535897932384626433832795028841971693993751058209749445923";

struct ExactPair {
    std::string_view r1;
    std::string_view r2;
};

// S_k(2) = R1 + R2 pi for k = 1..30, factored rows expanded.
inline constexpr std::array<ExactPair, 30> kSk2 = {{
    {"3", "1"},
    {"11", "7/2"},
    {"55", "35/2"},
    {"355", "113"},
    {"2807", "1787/2"},
    {"26259", "16717/2"},
    {"283623", "90280"},
    {"3473315", "2211181/2"},
    {"47552791", "30273047/2"},
    {"719718067", "229093376"},
    {"11932268231", "7596317885/2"},
    {"215053088835", "136907048461/2"},
    {"4186305575415", "1332542451241"},
    {"87534887434835", "55726440112987/2"},
    {"1956680617267879", "1245661569161135/2"},
    {"46561960552921315", "14821132364094533"},
    {"1175204650272267479", "748158516941653967/2"},
    {"31357650670190565363", "19962900431638852297/2"},
    {"881958890078887314567", "280736233919792968780"},
    {"26078499305918584929155", "16602088291822017588121/2"},
    {"808742391638178302137783", "514861397268710391722627/2"},
    {"26247592141035336332994451", "8354868067011516415979216"},
    {"889735042691243752903048295", "566422920345559866343383785/2"},
    {"31443867356631172742458654755", "20017787678934958873836057001/2"},
    {"1156619309474553778799639807127", "368163360756819772832459706481"},
    {"44213527064791762795003086702899", "28147205535555628918615623800767/2"},
    {"1753923935435742120851304944917063", "1116582656527154585466952320011435/2"},
    {"72107782245849606090651464405624515", "22952619959641949809923983081211353"},
    {"3068555154632012211023759300893608311", "1953502884039199982724152729710551347/2"},
    {"135010171084427194623890031993168567507", "85950144383076253408132013000868398677/2"},
}};

struct ErrorRow {
    long k;
    std::string_view seven_terms;
    std::string_view exact;
};

inline constexpr std::array<ErrorRow, 20> kErrorTable = {{
    {5, "1.394929580622094159e-05", "1.458979572496761765e-05"},
    {10, "1.208533257871241603e-10", "1.208426564955768191e-10"},
    {15, "-1.717906040975859856e-15", "-1.717926356677219480e-15"},
    {20, "-5.757361768118465909e-20", "-5.757368219957248525e-20"},
    {25, "-5.054992959778042247e-25", "-5.054994756412840440e-25"},
    {30, "6.170826902775628923e-30", "6.170826687049165966e-30"},
    {35, "2.283000783226568157e-34", "2.283000802727741913e-34"},
    {40, "2.208776974546136119e-39", "2.208776992026544785e-39"},
    {45, "-2.093726806383270815e-44", "-2.093726801667894352e-44"},
    {50, "-9.003884490090622337e-49", "-9.003884494714834077e-49"},
    {55, "-9.605682948187048732e-54", "-9.605682954606388173e-54"},
    {60, "6.756128797397263314e-59", "6.756128794821975275e-59"},
    {65, "3.530031377831535807e-63", "3.530031378066361048e-63"},
    {70, "4.137108141343023278e-68", "4.137108141778060533e-68"},
    {75, "-2.030602678726272460e-73", "-2.030602678498624493e-73"},
    {80, "-1.375355163972183061e-77", "-1.375355163990000725e-77"},
    {85, "-1.764261661388176988e-82", "-1.764261661430246816e-82"},
    {90, "5.380737425072894637e-88", "5.380737424803436715e-88"},
    {95, "5.323448270450853269e-92", "5.323448270468033075e-92"},
    {100, "7.454268189222908298e-97", "7.454268189274244908e-97"},
}};

// Taylor coefficients c_j and F_j, j = 0..10.
inline constexpr std::array<std::string_view, 11> kCoeffC = {
    "1", "-1/4", "-1/32", "5/384", "7/10240", "-19/40960", "-869/61931520", "715/49545216",
    "2339/7927234560", "-200821/475634073600", "-12863/1993133260800"};

inline constexpr std::array<std::string_view, 11> kCoeffF = {
    "1", "1/4", "1/32", "-5/128", "-21/2048", "399/8192", "869/65536", "-39325/262144",
    "-334477/8388608", "28717403/33554432", "59697183/268435456"};

} // namespace lehmer::reference

#endif
