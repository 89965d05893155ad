// Frozen reference values computed with mpmath at 40 digits (tests/oracles/gen_oracles.py).
#pragma once

#include <array>

namespace oracle {

struct BesselPoint { double order, x, value; };
struct BesselZeros { double order; std::array<double, 5> zeros; };
struct DimensionConstants { int d; double v_d, first_zero, H_d, C_2, C_1, C_half, C_3, C_heat; };

inline constexpr BesselPoint kBesselTable[] = {
    {0.0, 0.0, 1.0},
    {0.0, 0.3, 0.97762624653829608757},
    {0.0, 1.0, 0.76519768655796655145},
    {0.0, 2.5, -0.048383776468197996327},
    {0.0, 7.25, 0.29199692419177899751},
    {0.0, 11.9, 0.025049441699589563728},
    {0.0, 12.1, 0.069666773606807388498},
    {0.0, 16.9, -0.17878338789121910229},
    {0.0, 17.1, -0.15928533153226546822},
    {0.0, 23.7, -0.099516546057872654399},
    {0.0, 31.4159, 0.10024835503280883505},
    {0.0, 49.9, 0.045788625467907050808},
    {0.5, 0.0, 0.0},
    {0.5, 0.3, 0.43049351732812456502},
    {0.5, 1.0, 0.67139670714180309042},
    {0.5, 2.5, 0.30200490606236568126},
    {0.5, 7.25, 0.24390099437078511569},
    {0.5, 11.9, -0.14297213406708074617},
    {0.5, 12.1, -0.10313819465555987942},
    {0.5, 16.9, -0.18033100103999689014},
    {0.5, 17.1, -0.18987412878526772416},
    {0.5, 23.7, -0.16233569317853241411},
    {0.5, 31.4159, -3.7774532357386824313e-6},
    {0.5, 49.9, -0.040368652149918357942},
    {1.0, 0.0, 0.0},
    {1.0, 0.3, 0.14831881627310400774},
    {1.0, 1.0, 0.44005058574493351596},
    {1.0, 2.5, 0.49709410246427403801},
    {1.0, 7.25, 0.068581700653131744531},
    {1.0, 11.9, -0.22898324966192407078},
    {1.0, 12.1, -0.21574897337692477718},
    {1.0, 16.9, -0.080749254250142217252},
    {1.0, 17.1, -0.11351884829143491856},
    {1.0, 23.7, -0.13232766631155383017},
    {1.0, 31.4159, -0.099471915909517391917},
    {1.0, 49.9, -0.1027969573688853756},
    {1.5, 0.0, 0.0},
    {1.5, 0.3, 0.043309881918378323272},
    {1.5, 1.0, 0.2402978391234270109},
    {1.5, 2.5, 0.52508026466400314595},
    {1.5, 7.25, -0.13464968568116875681},
    {1.5, 11.9, -0.19382873495825973541},
    {1.5, 12.1, -0.21340358035979597602},
    {1.5, 16.9, 0.061096782885996094779},
    {1.5, 17.1, 0.023204290706096679574},
    {1.5, 23.7, -0.029404351620213084259},
    {1.5, 31.4159, -0.14235268899353704972},
    {1.5, 49.9, -0.10629966925535610115},
    {2.0, 0.0, 0.0},
    {2.0, 0.3, 0.01116586194906396404},
    {2.0, 1.0, 0.11490348493190048047},
    {2.0, 2.5, 0.44605905843961722674},
    {2.0, 7.25, -0.27307783435643230936},
    {2.0, 11.9, -0.063534021474702852935},
    {2.0, 12.1, -0.10532776094183627729},
    {2.0, 16.9, 0.16922726312788866238},
    {2.0, 17.1, 0.14600827325256547774},
    {2.0, 23.7, 0.088349654386011571684},
    {2.0, 31.4159, -0.10658093922804229276},
    {2.0, 49.9, -0.049908743999726103939},
    {2.5, 0.0, 0.0},
    {2.5, 0.3, 0.0026053018556586676952},
    {2.5, 1.0, 0.049496810228477942271},
    {2.5, 2.5, 0.32809141153443809388},
    {2.5, 7.25, -0.29961810568713080816},
    {2.5, 11.9, 0.094107747102813585977},
    {2.5, 12.1, 0.050228216053957571318},
    {2.5, 16.9, 0.19117658380082459927},
    {2.5, 17.1, 0.19394505697931977321},
    {2.5, 23.7, 0.15861362335318898572},
    {2.5, 31.4159, -0.013589914498311444405},
    {2.5, 49.9, 0.033977890471239634426},
    {3.0, 0.0, 0.0},
    {3.0, 0.3, 0.00055934304774884612053},
    {3.0, 1.0, 0.019563353982668405919},
    {3.0, 2.5, 0.21660039103911352477},
    {3.0, 7.25, -0.21924533340150819107},
    {3.0, 11.9, 0.20762727605698193534},
    {3.0, 12.1, 0.18092987885069790866},
    {3.0, 16.9, 0.12080304433958332077},
    {3.0, 17.1, 0.14767283033881865604},
    {3.0, 23.7, 0.14723900038514228109},
    {3.0, 31.4159, 0.085901597793144180549},
    {3.0, 49.9, 0.098796256447063643823},
    {3.5, 0.0, 0.0},
    {3.5, 0.3, 0.000111815675932804982},
    {3.5, 1.0, 0.00718621201896270046},
    {3.5, 2.5, 0.1311025584048730418},
    {3.5, 7.25, -0.071983490654783524686},
    {3.5, 11.9, 0.23336980516952594801},
    {3.5, 12.1, 0.23415904153911728648},
    {3.5, 16.9, -0.0045356634182965091965},
    {3.5, 17.1, 0.03350479028200851727},
    {3.5, 23.7, 0.062867141357172785888},
    {3.5, 31.4159, 0.14018978509800780427},
    {3.5, 49.9, 0.10970426749896728697},
    {4.0, 0.0, 0.0},
    {4.0, 0.3, 0.000020999005912958371041},
    {4.0, 1.0, 0.0024766389641099550438},
    {4.0, 2.5, 0.073781880054255232704},
    {4.0, 7.25, 0.09163342050690828916},
    {4.0, 11.9, 0.16822004301603828252},
    {4.0, 12.1, 0.19504505623970300885},
    {4.0, 16.9, -0.12633860833277032364},
    {4.0, 17.1, -0.094193245063506300186},
    {4.0, 23.7, -0.051073958085975551155},
    {4.0, 31.4159, 0.12298694977553146491},
    {4.0, 49.9, 0.061788053392158606202},
    {4.5, 0.0, 0.0},
    {4.5, 0.3, 3.7305827734485513762e-6},
    {4.5, 1.0, 0.00080667390426096094871},
    {4.5, 2.5, 0.03899575199920642317},
    {4.5, 7.25, 0.23011680436527085329},
    {4.5, 11.9, 0.043168608879260501086},
    {4.5, 12.1, 0.085235692274457387803},
    {4.5, 16.9, -0.19305526095633202911},
    {4.5, 17.1, -0.180229645752766579},
    {4.5, 23.7, -0.14004526936583837386},
    {4.5, 31.4159, 0.044826597059882325071},
    {4.5, 49.9, -0.018588514268979694371},
    {5.0, 0.0, 0.0},
    {5.0, 0.3, 6.3044326337710722806e-7},
    {5.0, 1.0, 0.00024975773021123443138},
    {5.0, 2.5, 0.019501625134503219886},
    {5.0, 7.25, 0.32035807327120009635},
    {5.0, 11.9, -0.094538171508384770622},
    {5.0, 12.1, -0.051974469766596745778},
    {5.0, 16.9, -0.18060830272195980534},
    {5.0, 17.1, -0.19173984557320756841},
    {5.0, 23.7, -0.16447915501331968232},
    {5.0, 31.4159, -0.054583201751513932196},
    {5.0, 49.9, -0.088890356103631402347},
    {5.5, 0.0, 0.0},
    {5.5, 0.3, 1.0180727065155929045e-7},
    {5.5, 1.0, 0.000073853119385948078433},
    {5.5, 2.5, 0.0092821487922700816113},
    {5.5, 7.25, 0.35764573055649906671},
    {5.5, 11.9, -0.200721277445715485},
    {5.5, 12.1, -0.17076059273993410547},
    {5.5, 16.9, -0.098274830582116997432},
    {5.5, 17.1, -0.12836249857293829569},
    {5.5, 23.7, -0.11604888921761773799},
    {5.5, 31.4159, -0.12734790014360761438},
    {5.5, 49.9, -0.11305690534307184106},
    {6.0, 0.0, 0.0},
    {6.0, 0.3, 1.5769532945203227572e-8},
    {6.0, 1.0, 0.000020938338002389269966},
    {6.0, 2.5, 0.0042246204837576468418},
    {6.0, 7.25, 0.35023978400509184374},
    {6.0, 11.9, -0.24766388461972296371},
    {6.0, 12.1, -0.23799916348482428636},
    {6.0, 16.9, 0.019469790154095882613},
    {6.0, 17.1, -0.017935319599188184263},
    {6.0, 23.7, -0.018326529261416719868},
    {6.0, 31.4159, -0.14036133718811997333},
    {6.0, 49.9, -0.079601752010120811081},
    {6.5, 0.0, 0.0},
    {6.5, 0.3, 2.3504837752892736553e-9},
    {6.5, 1.0, 5.7104089844679140502e-6},
    {6.5, 2.5, 0.0018457026867819359193},
    {6.5, 7.25, 0.31251809716872773067},
    {6.5, 11.9, -0.22870928550975380655},
    {6.5, 12.1, -0.24047259476530657459},
    {6.5, 16.9, 0.12908939489696593611},
    {6.5, 17.1, 0.097657278249706856628},
    {6.5, 23.7, 0.086182915720530562976},
    {6.5, 31.4159, -0.089416339883728968273},
    {6.5, 49.9, -0.0063338496343026754019},
    {7.0, 0.0, 0.0},
    {7.0, 0.3, 3.3805443102187480913e-10},
    {7.0, 1.0, 1.5023258174368082122e-6},
    {7.0, 2.5, 0.00077655318753348495405},
    {7.0, 7.25, 0.25934915542688295536},
    {7.0, 11.9, -0.15520692222578964657},
    {7.0, 12.1, -0.18405775848281576962},
    {7.0, 16.9, 0.19443300578995688175},
    {7.0, 17.1, 0.17915365638079480752},
    {7.0, 23.7, 0.15519989969108336847},
    {7.0, 31.4159, 0.00096907494765220357999},
    {7.0, 49.9, 0.069747650209413972829},
    {7.5, 0.0, 0.0},
    {7.5, 0.3, 4.7026277642567943444e-11},
    {7.5, 1.0, 3.821974121348042196e-7},
    {7.5, 2.5, 0.00031550517899598516895},
    {7.5, 7.25, 0.20273154712535755381},
    {7.5, 11.9, -0.049129202522923127196},
    {7.5, 12.1, -0.087598393371552296986},
    {7.5, 16.9, 0.19757436511824464059},
    {7.5, 17.1, 0.20260487385049321594},
    {7.5, 23.7, 0.16332221851579905945},
    {7.5, 31.4159, 0.090347132427626961668},
    {7.5, 49.9, 0.11140680423593887953},
    {8.0, 0.0, 0.0},
    {8.0, 0.3, 6.340502484263521178e-12},
    {8.0, 1.0, 9.4223441726045005454e-8},
    {8.0, 2.5, 0.0001240773664298689009},
    {8.0, 7.25, 0.15057237819854420798},
    {8.0, 11.9, 0.065067505530558673634},
    {8.0, 12.1, 0.025039773504706866965},
    {8.0, 16.9, 0.14159897203876780641},
    {8.0, 17.1, 0.16461082774720732492},
    {8.0, 23.7, 0.11000579490171913162},
    {8.0, 31.4159, 0.14079319014369759009},
    {8.0, 49.9, 0.099170231026790061975},
    {8.5, 0.0, 0.0},
    {8.5, 0.3, 8.3010683912351691364e-13},
    {8.5, 1.0, 2.2552197554149243847e-8},
    {8.5, 2.5, 0.000047328387193975094433},
    {8.5, 7.25, 0.10692648309063272549},
    {8.5, 11.9, 0.16678171930438852017},
    {8.5, 12.1, 0.13187954513115083453},
    {8.5, 16.9, 0.046272467634020431281},
    {8.5, 17.1, 0.080066295303357367878},
    {8.5, 23.7, 0.01718557701098782908},
    {8.5, 31.4159, 0.13255395448061794567},
    {8.5, 49.9, 0.039822868943703140191},
    {9.0, 0.0, 0.0},
    {9.0, 0.3, 1.0570147217965369059e-13},
    {9.0, 1.0, 5.249250179911875043e-9},
    {9.0, 2.5, 0.000017541957617676011693},
    {9.0, 7.25, 0.072948506804387020878},
    {9.0, 11.9, 0.24269264394754920776},
    {9.0, 12.1, 0.21716820278656038709},
    {9.0, 16.9, -0.060374807410058366805},
    {9.0, 17.1, -0.025131829248904912856},
    {9.0, 23.7, -0.080934384145618975812},
    {9.0, 31.4159, 0.070736368547493930747},
    {9.0, 49.9, -0.037949580140703732516},
    {9.5, 0.0, 0.0},
    {9.5, 0.3, 1.3109907764681662823e-14},
    {9.5, 1.0, 1.1899462857329257931e-9},
    {9.5, 2.5, 6.3278539230454731959e-6},
    {9.5, 7.25, 0.047992620121643319751},
    {9.5, 11.9, 0.28738880152919244172},
    {9.5, 12.1, 0.27288370471283859343},
    {9.5, 16.9, -0.15102809590059095232},
    {9.5, 17.1, -0.12300680249627828881},
    {9.5, 23.7, -0.15099501137711580652},
    {9.5, 31.4159, -0.018618573762412688755},
    {9.5, 49.9, -0.097839894976561056221},
    {10.0, 0.0, 0.0},
    {10.0, 0.3, 1.5858465157002573226e-15},
    {10.0, 1.0, 2.630615123687453207e-10},
    {10.0, 2.5, 2.2247284173983832948e-6},
    {10.0, 7.25, 0.030541155936485636957},
    {10.0, 11.9, 0.30203061136489390953},
    {10.0, 12.1, 0.29802036287199453532},
    {10.0, 16.9, -0.20590350064119683614},
    {10.0, 17.1, -0.19106538485131775951},
    {10.0, 23.7, -0.17147494741737911325},
    {10.0, 31.4159, -0.10026420215179251166},
    {10.0, 49.9, -0.11285945833205393342},
    {10.5, 0.0, 0.0},
    {10.5, 0.3, 1.8731930632173182831e-16},
    {10.5, 1.0, 5.6781874776346222993e-11},
    {10.5, 2.5, 7.6330262117050185564e-7},
    {10.5, 7.25, 0.018847279986777353857},
    {10.5, 11.9, 0.29207435036407000023},
    {10.5, 12.1, 0.29661552838487670888},
    {10.5, 16.9, -0.21606736835066114691},
    {10.5, 17.1, -0.21674052029922213322},
    {10.5, 23.7, -0.1382364300137388976},
    {10.5, 31.4159, -0.14381426857271274755},
    {10.5, 49.9, -0.077076536369648231739},
};

inline constexpr BesselZeros kBesselZeros[] = {
    {0.0, {2.4048255576957727686, 5.5200781102863106496, 8.653727912911012217, 11.791534439014281614, 14.930917708487785948}},
    {0.5, {3.1415926535897932385, 6.2831853071795864769, 9.4247779607693797154, 12.566370614359172954, 15.707963267948966192}},
    {1.0, {3.8317059702075123156, 7.0155866698156187535, 10.173468135062722077, 13.323691936314223032, 16.470630050877632813}},
    {1.5, {4.4934094579090641753, 7.7252518369377071642, 10.904121659428899827, 14.06619391283147348, 17.22075527193076874}},
    {2.0, {5.1356223018406825563, 8.4172441403998648578, 11.619841172149059427, 14.795951782351260747, 17.959819494987826455}},
    {2.5, {5.7634591968945497914, 9.0950113304763551563, 12.322940970566582052, 15.51460301088674823, 18.689036355362822202}},
    {3.0, {6.3801618959239835062, 9.7610231299816696785, 13.01520072169843442, 16.223466160318768122, 19.409415226435011554}},
    {3.5, {6.987932000500519959, 10.417118547379364763, 13.698023153249249, 16.923621285213839579, 20.121806174453818286}},
    {4.0, {7.5883424345038043851, 11.064709488501184883, 14.372536671617589679, 17.615966049804833042, 20.826932956962387683}},
    {4.5, {8.1825614525712427017, 11.704907154570390558, 15.039664707616520808, 18.30125595954199022, 21.525417733399945437}},
    {5.0, {8.7714838159599540191, 12.338604197466943986, 15.700174079711671038, 18.980133875179921121, 22.217799896561267869}},
    {5.5, {9.3558121110427461714, 12.966530172774344558, 16.354709639350463182, 19.6531521018211851, 22.904550647903721947}},
    {6.0, {9.9361095242176848947, 13.589290170541217053, 17.003819667816014455, 20.320789213566505553, 23.5860844355813903}},
    {6.5, {10.512835408093997982, 14.207392458842460327, 17.647974870165897508, 20.983463068944768959, 24.262768042397007841}},
    {7.0, {11.086370019245083846, 14.821268727013171251, 18.287582832481726446, 21.641541019848400775, 24.934927887673022269}},
    {7.5, {11.657032192516371598, 15.431289210268378367, 18.922999198546148478, 22.295348019130766325, 25.60285595381064707}},
    {8.0, {12.225092264004655176, 16.037774190887708832, 19.554536430997055146, 22.94517313187462024, 26.26681464117664371}},
    {8.5, {12.790781711972119709, 16.641002881512188772, 20.182470764949172272, 23.591274817982966893, 26.927040778818018078}},
    {9.0, {13.354300477435331066, 17.241220382489128452, 20.807047789264107167, 24.233885257750552061, 27.583748963573006318}},
    {9.5, {13.915822610504896453, 17.838643199205323948, 21.42848697211535907, 24.873213923875145906, 28.237134359968099251}},
    {10.0, {14.475500686554541238, 18.433463666966582642, 22.046985364697801872, 25.509450554182826088, 28.887375063530457027}},
};

inline constexpr DimensionConstants kConstants[] = {
    {2, 3.1415926535897932385, 2.4048255576957727686, 2.5663229295977068421, 0.45190871855693885953, 0.12748109586211976932, 0.008162010681846344997, 0.65605501011526329491, 0.65774462347945691407},
    {3, 4.1887902047863909846, 3.1415926535897932385, 3.0, 0.22507907903927651739, 0.025330295910584442861, 0.00023748950829102441591, 0.43447719616784682518, 0.39356594834874674535},
    {4, 4.9348022005446793094, 3.8317059702075123156, 3.3590330312232124846, 0.10312934878970644187, 0.0042836130343375620278, 5.0844113403306921065e-6, 0.27201668751404446802, 0.2163139948580662718},
    {5, 5.2637890139143245967, 4.4934094579090641753, 3.6689160970036168495, 0.044408740475089665624, 0.00064262146304480383764, 8.6688022229801832573e-8, 0.16333149093514029126, 0.11161389296443783691},
    {6, 5.1677127800499700292, 5.1356223018406825563, 3.9435188965115825514, 0.018199168327410378593, 0.00008762450603046301685, 1.2326448680488793621e-9, 0.09485654166372637687, 0.054763353930693148945},
    {7, 4.7247659703314011696, 5.7634591968945497914, 4.1913420922314330376, 0.00715710133049348921, 0.000011035066131679147708, 1.5067581410760922596e-11, 0.053581888403683501831, 0.025768046533699938831},
    {8, 4.0587121264167682182, 6.3801618959239835062, 4.4180207056352407617, 0.0027169930315712376645, 1.298193145127110289e-6, 1.6177292162765910221e-13, 0.029556310089751763732, 0.011697936092863880369},
    {9, 3.2985089027387068694, 6.987932000500519959, 4.6275057207423759596, 0.0010000527417395608267, 1.4388233469283064289e-7, 1.5502130107304484091e-15, 0.015968223339630725633, 0.0051467103151448944153},
    {10, 2.5501640398773454439, 7.5883424345038043851, 4.8226871427897334946, 0.00035812056547016865959, 1.5123159125636087992e-8, 1.3424735615122111683e-17, 0.0084691739943460858487, 0.0022022241608566949852},
};

// Continuum Chiti ratio sup / (C_2(p) lambda^{1/p} ||omega||_p) of the unit-square ground state.
inline constexpr double kSquareChitiRatio2 = 0.99612629629280927342;
inline constexpr double kSquareChitiRatio1 = 0.9805375389555541793;

}  // namespace oracle
