// (alpha, beta, z, E_{alpha,beta}(z)) computed with 40+ digit arithmetic.
pub const ML_REFERENCE: &[(f64, f64, f64, f64)] = &[
    (0.3, 0.5, -0.001, 5.6333169653957678153e-1),
    (0.3, 0.5, -0.5, 3.0363310176042706703e-1),
    (0.3, 0.5, -2.0, 1.110854803064770455e-1),
    (0.3, 0.5, -5.0, 4.5519369411852957386e-2),
    (0.3, 0.5, -10.0, 2.2472804921101307345e-2),
    (0.3, 0.5, -20.0, 1.1093071721269412932e-2),
    (0.3, 0.5, -50.0, 4.3918174370267184428e-3),
    (0.3, 0.5, -100.0, 2.1873403669499526425e-3),
    (0.3, 0.5, -300.0, 7.2711278217211650454e-4),
    (0.3, 0.5, -1000.0, 2.1791819371576021156e-4),
    (0.3, 0.5, -10000.0, 2.1783423931309050424e-5),
    (0.3, 0.5, -100000.0, 2.1782581996352822232e-6),
    (0.3, 0.5, -1000000.0, 2.1782497778927076389e-7),
    (0.3, 0.5, 0.5, 1.5196111396142771869),
    (0.3, 0.5, 2.0, 2.5235354226878818899e+5),
    (0.3, 0.5, 5.0, 3.2882776537383242676e+94),
    (0.3, 1.0, -0.001, 9.9888687562755948593e-1),
    (0.3, 1.0, -0.5, 6.3264900594359902246e-1),
    (0.3, 1.0, -2.0, 2.9023222616787535504e-1),
    (0.3, 1.0, -5.0, 1.3708086902027063889e-1),
    (0.3, 1.0, -10.0, 7.2649729072772086177e-2),
    (0.3, 1.0, -20.0, 3.7406226213884453058e-2),
    (0.3, 1.0, -50.0, 1.5228201501814695234e-2),
    (0.3, 1.0, -100.0, 7.658856222286641491e-3),
    (0.3, 1.0, -300.0, 2.5629387026455551192e-3),
    (0.3, 1.0, -1000.0, 7.6993246495257769278e-4),
    (0.3, 1.0, -10000.0, 7.7033810249795533348e-5),
    (0.3, 1.0, -100000.0, 7.7037867563508560701e-6),
    (0.3, 1.0, -1000000.0, 7.7038273304247192874e-7),
    (0.3, 1.0, 0.5, 2.0620157899559994895),
    (0.3, 1.0, 2.0, 7.9485907625183568623e+4),
    (0.3, 1.0, 5.0, 2.2491502775548074025e+93),
    (0.3, 1.5, -0.001, 1.1273064505961818731),
    (0.3, 1.5, -0.5, 7.5891369933025990221e-1),
    (0.3, 1.5, -2.0, 3.756675047721251894e-1),
    (0.3, 1.5, -5.0, 1.8524257891187128076e-1),
    (0.3, 1.5, -10.0, 1.0019293777252088034e-1),
    (0.3, 1.5, -20.0, 5.2198626571391979356e-2),
    (0.3, 1.5, -50.0, 2.1413495503388350671e-2),
    (0.3, 1.5, -100.0, 1.0798334500965411938e-2),
    (0.3, 1.5, -300.0, 3.6200420248042543025e-3),
    (0.3, 1.5, -1000.0, 1.0881893135081233589e-3),
    (0.3, 1.5, -10000.0, 1.0890308499009604757e-4),
    (0.3, 1.5, -100000.0, 1.0891150633382773456e-5),
    (0.3, 1.5, -1000000.0, 1.0891234852802869031e-6),
    (0.3, 1.5, 0.5, 2.0698637836191732301),
    (0.3, 1.5, 2.0, 2.5035768767242071364e+4),
    (0.3, 1.5, 5.0, 1.5383971500319748778e+92),
    (0.3, 2.3, -0.001, 8.5641068443994086049e-1),
    (0.3, 2.3, -0.5, 6.064720448054021171e-1),
    (0.3, 2.3, -2.0, 3.1981167822297681319e-1),
    (0.3, 2.3, -5.0, 1.635544335056099567e-1),
    (0.3, 2.3, -10.0, 9.0024520395551819451e-2),
    (0.3, 2.3, -20.0, 4.7383204217836404415e-2),
    (0.3, 2.3, -50.0, 1.9568632052624849933e-2),
    (0.3, 2.3, -100.0, 9.8910618939072587184e-3),
    (0.3, 2.3, -300.0, 3.3211466423916202943e-3),
    (0.3, 2.3, -1000.0, 9.9890057860469575762e-4),
    (0.3, 2.3, -10000.0, 9.9988995652900163258e-5),
    (0.3, 2.3, -100000.0, 9.9998899463864983242e-6),
    (0.3, 2.3, -1000000.0, 9.9999889945372160619e-7),
    (0.3, 2.3, 0.5, 1.4241292692966502457),
    (0.3, 2.3, 2.0, 3.9420067252292116038e+3),
    (0.3, 2.3, 5.0, 2.1044976983925287848e+90),
    (0.3, 3.7, -0.001, 2.3960412276949593177e-1),
    (0.3, 3.7, -0.5, 1.7762075049653305906e-1),
    (0.3, 3.7, -2.0, 9.9396392771484086056e-2),
    (0.3, 3.7, -5.0, 5.2689499396252032564e-2),
    (0.3, 3.7, -10.0, 2.9522487300580838385e-2),
    (0.3, 3.7, -20.0, 1.5704266576505418417e-2),
    (0.3, 3.7, -50.0, 6.5313327254762231944e-3),
    (0.3, 3.7, -100.0, 3.3094320049432080732e-3),
    (0.3, 3.7, -300.0, 1.1130815988463532441e-3),
    (0.3, 3.7, -1000.0, 3.349802300873624832e-4),
    (0.3, 3.7, -10000.0, 3.3538917421724092538e-5),
    (0.3, 3.7, -100000.0, 3.3543012170264883881e-6),
    (0.3, 3.7, -1000000.0, 3.3543421698258252131e-7),
    (0.3, 3.7, 0.5, 3.6508887323126727035e-1),
    (0.3, 3.7, 2.0, 1.5478320231180226414e+2),
    (0.3, 3.7, 5.0, 1.1515649421080596754e+87),
    (0.3, 0.3, -0.001, 3.3360218228247226589e-1),
    (0.3, 0.3, -0.5, 1.437565001472212678e-1),
    (0.3, 0.3, -2.0, 3.206239921884749485e-2),
    (0.3, 0.3, -5.0, 7.275100803154911655e-3),
    (0.3, 0.3, -10.0, 2.0517863032276150212e-3),
    (0.3, 0.3, -20.0, 5.4462489804465207853e-4),
    (0.3, 0.3, -50.0, 9.0297795269851063585e-5),
    (0.3, 0.3, -100.0, 2.2841967214289510167e-5),
    (0.3, 0.3, -300.0, 2.5579373942385823097e-6),
    (0.3, 0.3, -1000.0, 2.3084455544850575396e-7),
    (0.3, 0.3, -10000.0, 2.3108790665424753764e-9),
    (0.3, 0.3, -100000.0, 2.3111225022423506696e-11),
    (0.3, 0.3, -1000000.0, 2.3111468466554488012e-13),
    (0.3, 0.3, 0.5, 1.1694769581219357611),
    (0.3, 0.3, 2.0, 4.0058643366882275972e+5),
    (0.3, 0.3, 5.0, 9.6149821876998458499e+94),
    (0.3, 1.3, -0.001, 1.1131243724405140529),
    (0.3, 1.3, -0.5, 7.3470198811280196651e-1),
    (0.3, 1.3, -2.0, 3.5488388691606233071e-1),
    (0.3, 1.3, -5.0, 1.7258382619594587697e-1),
    (0.3, 1.3, -10.0, 9.2735027092722794123e-2),
    (0.3, 1.3, -20.0, 4.8129688689305778826e-2),
    (0.3, 1.3, -50.0, 1.9695435969963706716e-2),
    (0.3, 1.3, -100.0, 9.9234114377771339004e-3),
    (0.3, 1.3, -300.0, 3.3247902043245149225e-3),
    (0.3, 1.3, -1000.0, 9.992300675350474543e-4),
    (0.3, 1.3, -10000.0, 9.999229661897502365e-5),
    (0.3, 1.3, -100000.0, 9.9999229621324368119e-6),
    (0.3, 1.3, -1000000.0, 9.9999922961726698957e-7),
    (0.3, 1.3, 0.5, 2.1240315799119989736),
    (0.3, 1.3, 2.0, 3.9742453812591779214e+4),
    (0.3, 1.3, 5.0, 4.4983005551096134654e+92),
    (0.5, 0.5, -0.001, 5.6319071092767513552e-1),
    (0.5, 0.5, -0.5, 2.5634441145129334951e-1),
    (0.5, 0.5, -2.0, 5.3398230926744799218e-2),
    (0.5, 0.5, -5.0, 1.0666394882413155097e-2),
    (0.5, 0.5, -10.0, 2.7796561095304283729e-3),
    (0.5, 0.5, -20.0, 7.026087267299005751e-4),
    (0.5, 0.5, -50.0, 1.1277028156766193889e-4),
    (0.5, 0.5, -100.0, 2.8205248812996592434e-5),
    (0.5, 0.5, -300.0, 3.1343343369401067503e-6),
    (0.5, 0.5, -1000.0, 2.8209436863274833442e-7),
    (0.5, 0.5, -10000.0, 2.8209478754245637265e-9),
    (0.5, 0.5, -100000.0, 2.8209479173156392472e-11),
    (0.5, 0.5, -1000000.0, 2.8209479177345500129e-13),
    (0.5, 0.5, 0.5, 1.5403698281390348336),
    (0.5, 0.5, 2.0, 2.1844599836350370111e+2),
    (0.5, 0.5, 5.0, 7.2004899337386939164e+11),
    (0.5, 1.0, -0.001, 9.988726200811514086e-1),
    (0.5, 1.0, -0.5, 6.1569034419292587487e-1),
    (0.5, 1.0, -2.0, 2.5539567631050574387e-1),
    (0.5, 1.0, -5.0, 1.1070463773306862637e-1),
    (0.5, 1.0, -10.0, 5.6140992743822585858e-2),
    (0.5, 1.0, -20.0, 2.8174348741051319319e-2),
    (0.5, 1.0, -50.0, 1.12815362653237725e-2),
    (0.5, 1.0, -100.0, 5.6416137829894329036e-3),
    (0.5, 1.0, -300.0, 1.8806214973780644895e-3),
    (0.5, 1.0, -1000.0, 5.641893014533876542e-4),
    (0.5, 1.0, -10000.0, 5.6418958072680841152e-5),
    (0.5, 1.0, -100000.0, 5.6418958351954680777e-6),
    (0.5, 1.0, -1000000.0, 5.6418958354747419216e-7),
    (0.5, 1.0, 0.5, 1.9523604891825570933),
    (0.5, 1.0, 2.0, 1.0894090438997797241e+2),
    (0.5, 1.0, 5.0, 1.4400979867466104041e+11),
    (0.5, 1.5, -0.001, 1.1273799188485913721),
    (0.5, 1.5, -0.5, 7.6861931161414825026e-1),
    (0.5, 1.5, -2.0, 3.7230216184474712807e-1),
    (0.5, 1.5, -5.0, 1.7785907245338627473e-1),
    (0.5, 1.5, -10.0, 9.4385900725617741414e-2),
    (0.5, 1.5, -20.0, 4.8591282562947434034e-2),
    (0.5, 1.5, -50.0, 1.977436927469352455e-2),
    (0.5, 1.5, -100.0, 9.943583862170105671e-3),
    (0.5, 1.5, -300.0, 3.327064595008739785e-3),
    (0.5, 1.5, -1000.0, 9.9943581069854661235e-4),
    (0.5, 1.5, -10000.0, 9.9994358104192731916e-5),
    (0.5, 1.5, -100000.0, 9.9999435810416480453e-6),
    (0.5, 1.5, -1000000.0, 9.9999943581041645253e-7),
    (0.5, 1.5, 0.5, 1.9047209783651141866),
    (0.5, 1.5, 2.0, 5.3970452194988986206e+1),
    (0.5, 1.5, 5.0, 2.8801959734732208082e+10),
    (0.5, 2.3, -0.001, 8.56513510361775038e-1),
    (0.5, 2.3, -0.5, 6.3104409938014306276e-1),
    (0.5, 2.3, -2.0, 3.4315111290792452721e-1),
    (0.5, 2.3, -5.0, 1.7646272756312615265e-1),
    (0.5, 2.3, -10.0, 9.7048744479128661645e-2),
    (0.5, 2.3, -20.0, 5.1003185470154942197e-2),
    (0.5, 2.3, -50.0, 2.1034545955220342244e-2),
    (0.5, 2.3, -100.0, 1.0626144066802584437e-2),
    (0.5, 2.3, -300.0, 3.5665555455958356543e-3),
    (0.5, 2.3, -1000.0, 1.0725578901248619994e-3),
    (0.5, 2.3, -10000.0, 1.0735598583690155544e-4),
    (0.5, 2.3, -100000.0, 1.0736601316916422769e-5),
    (0.5, 2.3, -1000000.0, 1.0736701597891847717e-6),
    (0.5, 2.3, 0.5, 1.2844800806405890065),
    (0.5, 2.3, 2.0, 1.7073973576081248617e+1),
    (0.5, 2.3, 5.0, 2.1931585634206370069e+9),
    (0.5, 3.7, -0.001, 2.3964182037900896194e-1),
    (0.5, 3.7, -0.5, 1.8838279616967485592e-1),
    (0.5, 3.7, -2.0, 1.1325596104253871279e-1),
    (0.5, 3.7, -5.0, 6.2416629814993326467e-2),
    (0.5, 3.7, -10.0, 3.5588598348834050157e-2),
    (0.5, 3.7, -20.0, 1.9115804924713951791e-2),
    (0.5, 3.7, -50.0, 7.9990784311309251141e-3),
    (0.5, 3.7, -100.0, 4.0616299155641942665e-3),
    (0.5, 3.7, -300.0, 1.3679974565266993854e-3),
    (0.5, 3.7, -1000.0, 4.1190065486621021698e-4),
    (0.5, 3.7, -10000.0, 4.1248240018102222074e-5),
    (0.5, 3.7, -100000.0, 4.1254065547125516139e-6),
    (0.5, 3.7, -1000000.0, 4.1254648180884450373e-7),
    (0.5, 3.7, 0.5, 3.25361986900058652e-1),
    (0.5, 3.7, 2.0, 1.988928623603029849),
    (0.5, 3.7, 5.0, 2.4207727263029770183e+7),
    (0.5, 0.5, -0.001, 5.6319071092767513552e-1),
    (0.5, 0.5, -0.5, 2.5634441145129334951e-1),
    (0.5, 0.5, -2.0, 5.3398230926744799218e-2),
    (0.5, 0.5, -5.0, 1.0666394882413155097e-2),
    (0.5, 0.5, -10.0, 2.7796561095304283729e-3),
    (0.5, 0.5, -20.0, 7.026087267299005751e-4),
    (0.5, 0.5, -50.0, 1.1277028156766193889e-4),
    (0.5, 0.5, -100.0, 2.8205248812996592434e-5),
    (0.5, 0.5, -300.0, 3.1343343369401067503e-6),
    (0.5, 0.5, -1000.0, 2.8209436863274833442e-7),
    (0.5, 0.5, -10000.0, 2.8209478754245637265e-9),
    (0.5, 0.5, -100000.0, 2.8209479173156392472e-11),
    (0.5, 0.5, -1000000.0, 2.8209479177345500129e-13),
    (0.5, 0.5, 0.5, 1.5403698281390348336),
    (0.5, 0.5, 2.0, 2.1844599836350370111e+2),
    (0.5, 0.5, 5.0, 7.2004899337386939164e+11),
    (0.5, 1.5, -0.001, 1.1273799188485913721),
    (0.5, 1.5, -0.5, 7.6861931161414825026e-1),
    (0.5, 1.5, -2.0, 3.7230216184474712807e-1),
    (0.5, 1.5, -5.0, 1.7785907245338627473e-1),
    (0.5, 1.5, -10.0, 9.4385900725617741414e-2),
    (0.5, 1.5, -20.0, 4.8591282562947434034e-2),
    (0.5, 1.5, -50.0, 1.977436927469352455e-2),
    (0.5, 1.5, -100.0, 9.943583862170105671e-3),
    (0.5, 1.5, -300.0, 3.327064595008739785e-3),
    (0.5, 1.5, -1000.0, 9.9943581069854661235e-4),
    (0.5, 1.5, -10000.0, 9.9994358104192731916e-5),
    (0.5, 1.5, -100000.0, 9.9999435810416480453e-6),
    (0.5, 1.5, -1000000.0, 9.9999943581041645253e-7),
    (0.5, 1.5, 0.5, 1.9047209783651141866),
    (0.5, 1.5, 2.0, 5.3970452194988986206e+1),
    (0.5, 1.5, 5.0, 2.8801959734732208082e+10),
    (0.7, 0.5, -0.001, 5.6310149818172044173e-1),
    (0.7, 0.5, -0.5, 2.1107437736522261913e-1),
    (0.7, 0.5, -2.0, -1.4883236157535449374e-2),
    (0.7, 0.5, -5.0, -2.6375845632765751098e-2),
    (0.7, 0.5, -10.0, -1.5736128789346789579e-2),
    (0.7, 0.5, -20.0, -8.2945194431597074199e-3),
    (0.7, 0.5, -50.0, -3.3943345213484370736e-3),
    (0.7, 0.5, -100.0, -1.7079741079361271964e-3),
    (0.7, 0.5, -300.0, -5.7155742786484814465e-4),
    (0.7, 0.5, -1000.0, -1.7169236803212244643e-4),
    (0.7, 0.5, -10000.0, -1.7177793928327510974e-5),
    (0.7, 0.5, -100000.0, -1.7178645777834814693e-6),
    (0.7, 0.5, -1000000.0, -1.7178730924217011971e-7),
    (0.7, 0.5, 0.5, 1.485844893721835994),
    (0.7, 0.5, 2.0, 3.4674733981524184476e+1),
    (0.7, 0.5, 5.0, 9.6033311234775223845e+4),
    (0.7, 1.0, -0.001, 9.9890025718286446051e-1),
    (0.7, 1.0, -0.5, 6.0514759205956427271e-1),
    (0.7, 1.0, -2.0, 2.1378672701529727534e-1),
    (0.7, 1.0, -5.0, 7.7569357764769809981e-2),
    (0.7, 1.0, -10.0, 3.6173265542309158149e-2),
    (0.7, 1.0, -20.0, 1.739569829160397999e-2),
    (0.7, 1.0, -50.0, 6.7936656703830938718e-3),
    (0.7, 1.0, -100.0, 3.3696874163059942732e-3),
    (0.7, 1.0, -300.0, 1.1172307483615784527e-3),
    (0.7, 1.0, -1000.0, 3.3454145717409959777e-4),
    (0.7, 1.0, -10000.0, 3.3429961379213110827e-5),
    (0.7, 1.0, -100000.0, 3.3427543859437362652e-6),
    (0.7, 1.0, -1000000.0, 3.3427302116628251815e-7),
    (0.7, 1.0, 0.5, 1.8249850568512024814),
    (0.7, 1.0, 2.0, 2.0966433131481956304e+1),
    (0.7, 1.0, 5.0, 3.0419819802049511246e+4),
    (0.7, 1.5, -0.001, 1.1274721103813958149),
    (0.7, 1.5, -0.5, 7.83700801790340871e-1),
    (0.7, 1.5, -2.0, 3.6722245880056833111e-1),
    (0.7, 1.5, -5.0, 1.6503730435180126514e-1),
    (0.7, 1.5, -10.0, 8.4543407706298473773e-2),
    (0.7, 1.5, -20.0, 4.2648396330864478195e-2),
    (0.7, 1.5, -50.0, 1.7134482948908095041e-2),
    (0.7, 1.5, -100.0, 8.5785853242765847131e-3),
    (0.7, 1.5, -300.0, 2.8619454120021934919e-3),
    (0.7, 1.5, -1000.0, 8.5883163472908844002e-4),
    (0.7, 1.5, -10000.0, 8.5892650514936073678e-5),
    (0.7, 1.5, -100000.0, 8.5893596806061163498e-6),
    (0.7, 1.5, -1000000.0, 8.5893691411069639316e-7),
    (0.7, 1.5, 0.5, 1.7612328143349915156),
    (0.7, 1.5, 2.0, 1.2414424420257593877e+1),
    (0.7, 1.5, 5.0, 9.635745265367704523e+3),
    (0.7, 2.3, -0.001, 8.5660986163151816823e-1),
    (0.7, 2.3, -0.5, 6.5664043619350987221e-1),
    (0.7, 2.3, -2.0, 3.6823503934569639802e-1),
    (0.7, 2.3, -5.0, 1.886347745119425516e-1),
    (0.7, 2.3, -10.0, 1.0280749150687395412e-1),
    (0.7, 2.3, -20.0, 5.3648352749973073269e-2),
    (0.7, 2.3, -50.0, 2.2010975973939159823e-2),
    (0.7, 2.3, -100.0, 1.1098392334865328574e-2),
    (0.7, 2.3, -300.0, 3.7201937413896677597e-3),
    (0.7, 2.3, -1000.0, 1.1182393934563943772e-3),
    (0.7, 2.3, -10000.0, 1.1190813783765619527e-4),
    (0.7, 2.3, -100000.0, 1.1191655963046959242e-5),
    (0.7, 2.3, -1000000.0, 1.1191740182916191947e-6),
    (0.7, 2.3, 0.5, 1.1820498102217752371),
    (0.7, 2.3, 2.0, 5.0104754511659097398),
    (0.7, 2.3, 5.0, 1.5310727054920162979e+3),
    (0.7, 3.7, -0.001, 2.3967205511807160934e-1),
    (0.7, 3.7, -0.5, 1.981232569361873931e-1),
    (0.7, 3.7, -2.0, 1.2778135434655832781e-1),
    (0.7, 3.7, -5.0, 7.3261006102099167852e-2),
    (0.7, 3.7, -10.0, 4.2456978695474100989e-2),
    (0.7, 3.7, -20.0, 2.2991346826976270496e-2),
    (0.7, 3.7, -50.0, 9.6659605416057884856e-3),
    (0.7, 3.7, -100.0, 4.9153988770375392261e-3),
    (0.7, 3.7, -300.0, 1.6571845619086877346e-3),
    (0.7, 3.7, -1000.0, 4.9914400861743389112e-4),
    (0.7, 3.7, -10000.0, 4.9991430022861773503e-5),
    (0.7, 3.7, -100000.0, 4.9999142901569686255e-6),
    (0.7, 3.7, -1000000.0, 4.9999914289149711211e-7),
    (0.7, 3.7, 0.5, 2.9976075304924838084e-1),
    (0.7, 3.7, 2.0, 7.8834145730161111469e-1),
    (0.7, 3.7, 5.0, 6.1108623834802210882e+1),
    (0.7, 0.7, -0.001, 7.6925707835149312579e-1),
    (0.7, 0.7, -0.5, 3.8661080082252710279e-1),
    (0.7, 0.7, -2.0, 7.7358224338521222028e-2),
    (0.7, 0.7, -5.0, 1.2201124167156126972e-2),
    (0.7, 0.7, -10.0, 2.7247024931022997249e-3),
    (0.7, 0.7, -20.0, 6.329972460096978347e-4),
    (0.7, 0.7, -50.0, 9.6636244462418065132e-5),
    (0.7, 0.7, -100.0, 2.377720552356958089e-5),
    (0.7, 0.7, -300.0, 2.6138530176381555604e-6),
    (0.7, 0.7, -1000.0, 2.3436718486240698872e-7),
    (0.7, 0.7, -10000.0, 2.340285332341603705e-9),
    (0.7, 0.7, -100000.0, 2.3399468724439469509e-11),
    (0.7, 0.7, -1000000.0, 2.339913028379341409e-13),
    (0.7, 0.7, 0.5, 1.6711092247431752548),
    (0.7, 0.7, 2.0, 2.8404204226104490936e+1),
    (0.7, 0.7, 5.0, 6.0633979933532585373e+4),
    (0.7, 1.7, -0.001, 1.09974281713553947),
    (0.7, 1.7, -0.5, 7.8970481588087145457e-1),
    (0.7, 1.7, -2.0, 3.9310663649235136233e-1),
    (0.7, 1.7, -5.0, 1.84486128447046038e-1),
    (0.7, 1.7, -10.0, 9.6382673445769084185e-2),
    (0.7, 1.7, -20.0, 4.9130215085419801e-2),
    (0.7, 1.7, -50.0, 1.9864126686592338123e-2),
    (0.7, 1.7, -100.0, 9.9663031258369400573e-3),
    (0.7, 1.7, -300.0, 3.3296092308387947385e-3),
    (0.7, 1.7, -1000.0, 9.996654585428259004e-4),
    (0.7, 1.7, -10000.0, 9.9996657003862078689e-5),
    (0.7, 1.7, -100000.0, 9.9999665724561405626e-6),
    (0.7, 1.7, -1000000.0, 9.9999966572697883372e-7),
    (0.7, 1.7, 0.5, 1.6499701137024049628),
    (0.7, 1.7, 2.0, 9.9832165657409781519),
    (0.7, 1.7, 5.0, 6.0837639604099022492e+3),
    (0.9, 0.5, -0.001, 5.6306337974699183422e-1),
    (0.9, 0.5, -0.5, 1.7138027546767609391e-1),
    (0.9, 0.5, -2.0, -1.0282482036797026215e-1),
    (0.9, 0.5, -5.0, -6.6346276353700432664e-2),
    (0.9, 0.5, -10.0, -3.0347874573228821712e-2),
    (0.9, 0.5, -20.0, -1.4241829127028770965e-2),
    (0.9, 0.5, -50.0, -5.4959541461279498022e-3),
    (0.9, 0.5, -100.0, -2.7165250428292934157e-3),
    (0.9, 0.5, -300.0, -8.9869517009245481174e-4),
    (0.9, 0.5, -1000.0, -2.6890289260738454756e-4),
    (0.9, 0.5, -10000.0, -2.6863203845685771762e-5),
    (0.9, 0.5, -100000.0, -2.6860499351659897333e-6),
    (0.9, 0.5, -1000000.0, -2.6860228942672457637e-7),
    (0.9, 0.5, 0.5, 1.4042134129976267293),
    (0.9, 0.5, 2.0, 1.4252371471374127726e+1),
    (0.9, 0.5, 5.0, 1.0734144961144845368e+3),
    (0.9, 1.0, -0.001, 9.9896084210999752736e-1),
    (0.9, 1.0, -0.5, 6.03405498695860968e-1),
    (0.9, 1.0, -2.0, 1.6352830001693004278e-1),
    (0.9, 1.0, -5.0, 3.4431324804098418323e-2),
    (0.9, 1.0, -10.0, 1.2820606051102099938e-2),
    (0.9, 1.0, -20.0, 5.7495078161091125836e-3),
    (0.9, 1.0, -50.0, 2.1753530768569760498e-3),
    (0.9, 1.0, -100.0, 1.0689724182870890385e-3),
    (0.9, 1.0, -300.0, 3.523300964553726613e-4),
    (0.9, 1.0, -1000.0, 1.0528835943209589052e-4),
    (0.9, 1.0, -10000.0, 1.0513113058088607289e-5),
    (0.9, 1.0, -100000.0, 1.051154432500310326e-6),
    (0.9, 1.0, -1000000.0, 1.0511387487148291145e-7),
    (0.9, 1.0, 0.5, 1.7043087220993991136),
    (0.9, 1.0, 2.0, 9.6049277845715006791),
    (0.9, 1.0, 5.0, 4.3895181466448263359e+2),
    (0.9, 1.5, -0.001, 1.1275744964101376003),
    (0.9, 1.5, -0.5, 8.0490771603316952476e-1),
    (0.9, 1.5, -2.0, 3.622034658828121788e-1),
    (0.9, 1.5, -5.0, 1.4474048044025213054e-1),
    (0.9, 1.5, -10.0, 6.9683285835014126448e-2),
    (0.9, 1.5, -20.0, 3.4180104731423816771e-2),
    (0.9, 1.5, -50.0, 1.3524229022622002818e-2),
    (0.9, 1.5, -100.0, 6.7383695242657011627e-3),
    (0.9, 1.5, -300.0, 2.2409255137663520254e-3),
    (0.9, 1.5, -1000.0, 6.7173629375828075445e-4),
    (0.9, 1.5, -10000.0, 6.715280859992543432e-5),
    (0.9, 1.5, -100000.0, 6.7150728361223963954e-6),
    (0.9, 1.5, -1000000.0, 6.7150520355723464028e-7),
    (0.9, 1.5, 0.5, 1.6427066600516884006),
    (0.9, 1.5, 2.0, 6.2615992099617152035),
    (0.9, 1.5, 5.0, 1.7939495951167335588e+2),
    (0.9, 2.3, -0.001, 8.5669722157496103539e-1),
    (0.9, 2.3, -0.5, 6.8288376365173462768e-1),
    (0.9, 2.3, -2.0, 3.9677664801408222085e-1),
    (0.9, 2.3, -5.0, 2.0019066520114726918e-1),
    (0.9, 2.3, -10.0, 1.0676067521739291588e-1),
    (0.9, 2.3, -20.0, 5.4906946367614420255e-2),
    (0.9, 2.3, -50.0, 2.231333574464299932e-2),
    (0.9, 2.3, -100.0, 1.1213914369001217925e-2),
    (0.9, 2.3, -300.0, 3.750589567967671614e-3),
    (0.9, 2.3, -1000.0, 1.1264960394995872824e-3),
    (0.9, 2.3, -10000.0, 1.1270040763413524857e-4),
    (0.9, 2.3, -100000.0, 1.127054856063331669e-5),
    (0.9, 2.3, -1000000.0, 1.1270599337961754958e-6),
    (0.9, 2.3, 0.5, 1.1059743218274266192),
    (0.9, 2.3, 2.0, 2.8585152229635797058),
    (0.9, 2.3, 5.0, 4.268860016164028275e+1),
    (0.9, 3.7, -0.001, 2.3969596445177917961e-1),
    (0.9, 3.7, -0.5, 2.0670755529904914644e-1),
    (0.9, 3.7, -2.0, 1.4286244947509526187e-1),
    (0.9, 3.7, -5.0, 8.5431192253310001411e-2),
    (0.9, 3.7, -10.0, 5.0238042163296655835e-2),
    (0.9, 3.7, -20.0, 2.7349098032065956223e-2),
    (0.9, 3.7, -50.0, 1.1521761766001154906e-2),
    (0.9, 3.7, -100.0, 5.8618639288752302302e-3),
    (0.9, 3.7, -300.0, 1.9767643373669378525e-3),
    (0.9, 3.7, -1000.0, 5.9544528688860521957e-4),
    (0.9, 3.7, -10000.0, 5.963800757147013206e-5),
    (0.9, 3.7, -100000.0, 5.9647364368689763389e-6),
    (0.9, 3.7, -1000000.0, 5.9648300137510686763e-7),
    (0.9, 3.7, 0.5, 2.8248515714816470283e-1),
    (0.9, 3.7, 2.0, 5.1743541892040776896e-1),
    (0.9, 3.7, 5.0, 3.3427275437163066731),
    (0.9, 0.9, -0.001, 9.347056967507222416e-1),
    (0.9, 0.9, -0.5, 5.3190235156843734154e-1),
    (0.9, 0.9, -2.0, 1.105980242932084855e-1),
    (0.9, 0.9, -5.0, 1.0212790452992133215e-2),
    (0.9, 0.9, -10.0, 1.434652362294128595e-3),
    (0.9, 0.9, -20.0, 2.8402595741192638794e-4),
    (0.9, 0.9, -50.0, 4.0536249580922190687e-5),
    (0.9, 0.9, -100.0, 9.7850635889096909486e-6),
    (0.9, 0.9, -300.0, 1.0628886183692898049e-6),
    (0.9, 0.9, -1000.0, 9.4917076469339157193e-8),
    (0.9, 0.9, -10000.0, 9.4633708077622595853e-10),
    (0.9, 0.9, -100000.0, 9.4605467335798517609e-12),
    (0.9, 0.9, -1000000.0, 9.4602644218967270315e-14),
    (0.9, 0.9, 0.5, 1.674248091065913674),
    (0.9, 0.9, 2.0, 1.0415849710921111519e+1),
    (0.9, 0.9, 5.0, 5.2492592092723235225e+2),
    (0.9, 1.9, -0.001, 1.039157890002472658),
    (0.9, 1.9, -0.5, 7.9318900260827808378e-1),
    (0.9, 1.9, -2.0, 4.1823584999153497516e-1),
    (0.9, 1.9, -5.0, 1.9311373503918030895e-1),
    (0.9, 1.9, -10.0, 9.8717939394889784897e-2),
    (0.9, 1.9, -20.0, 4.9712524609194541481e-2),
    (0.9, 1.9, -50.0, 1.9956492938462859247e-2),
    (0.9, 1.9, -100.0, 9.989310275817128481e-3),
    (0.9, 1.9, -300.0, 3.3321588996784818789e-3),
    (0.9, 1.9, -1000.0, 9.9989471164056784015e-4),
    (0.9, 1.9, -10000.0, 9.9998948688694184732e-5),
    (0.9, 1.9, -100000.0, 9.9999894884556743561e-6),
    (0.9, 1.9, -1000000.0, 9.9999989488612506443e-7),
    (0.9, 1.9, 0.5, 1.4086174441987983055),
    (0.9, 1.9, 2.0, 4.3024638922857508072),
    (0.9, 1.9, 5.0, 8.7590362932896544165e+1),
    (1.0, 0.5, -0.001, 5.6306195633262367945e-1),
    (1.0, 0.5, -0.5, 1.5527712659616933968e-1),
    (1.0, 0.5, -2.0, -1.5795962698142063189e-1),
    (1.0, 0.5, -5.0, -8.8606475886827649911e-2),
    (1.0, 0.5, -10.0, -3.427543110755518105e-2),
    (1.0, 0.5, -20.0, -1.5325407164895395749e-2),
    (1.0, 0.5, -50.0, -5.8202680349559122325e-3),
    (1.0, 0.5, -100.0, -2.8643587811196539028e-3),
    (1.0, 0.5, -300.0, -9.450571963576910418e-4),
    (1.0, 0.5, -1000.0, -2.8251899553625571528e-4),
    (1.0, 0.5, -10000.0, -2.821371165749030779e-5),
    (1.0, 0.5, -100000.0, -2.8209902330154400122e-6),
    (1.0, 0.5, -1000000.0, -2.8209521491712366346e-7),
    (1.0, 0.5, 0.5, 1.360084006368273076),
    (1.0, 0.5, 2.0, 1.0538428671807382812e+1),
    (1.0, 0.5, 5.0, 3.3190660470521432209e+2),
    (1.0, 1.0, -0.001, 9.9900049983337499165e-1),
    (1.0, 1.0, -0.5, 6.065306597126334236e-1),
    (1.0, 1.0, -2.0, 1.3533528323661269189e-1),
    (1.0, 1.0, -5.0, 6.7379469990854670966e-3),
    (1.0, 1.0, -10.0, 4.5399929762484851536e-5),
    (1.0, 1.0, -20.0, 2.061153622438557828e-9),
    (1.0, 1.0, -50.0, 1.928749847963917783e-22),
    (1.0, 1.0, -100.0, 3.720075976020835963e-44),
    (1.0, 1.0, -300.0, 5.1482002224120137812e-131),
    (1.0, 1.0, 0.5, 1.6487212707001281468),
    (1.0, 1.0, 2.0, 7.3890560989306502272),
    (1.0, 1.0, 5.0, 1.4841315910257660342e+2),
    (1.0, 1.5, -0.001, 1.1276272151326074796),
    (1.0, 1.5, -0.5, 8.1782491390317389453e-1),
    (1.0, 1.5, -2.0, 3.6107460526458845942e-1),
    (1.0, 1.5, -5.0, 1.3055921188691678737e-1),
    (1.0, 1.5, -10.0, 5.98465014655311468e-2),
    (1.0, 1.5, -20.0, 2.8975749535632584135e-2),
    (1.0, 1.5, -50.0, 1.1400197031654243984e-2),
    (1.0, 1.5, -100.0, 5.6705394232887594085e-3),
    (1.0, 1.5, -300.0, 1.88378213581371326e-3),
    (1.0, 1.5, -1000.0, 5.6447210254329254266e-4),
    (1.0, 1.5, -10000.0, 5.6421779725941377726e-5),
    (1.0, 1.5, -100000.0, 5.6419240453798930239e-6),
    (1.0, 1.5, -1000000.0, 5.6418986564297120407e-7),
    (1.0, 1.5, 0.5, 1.5917888456410335782),
    (1.0, 1.5, 2.0, 4.9871195441298132627),
    (1.0, 1.5, 5.0, 6.6268483024333313161e+1),
    (1.0, 2.3, -0.001, 8.5673707850200132631e-1),
    (1.0, 2.3, -0.5, 6.960169487572492558e-1),
    (1.0, 2.3, -2.0, 4.1305139098348203888e-1),
    (1.0, 2.3, -5.0, 2.0589132215025256358e-1),
    (1.0, 2.3, -10.0, 1.0778704614069783084e-1),
    (1.0, 2.3, -20.0, 5.4844289579353573924e-2),
    (1.0, 2.3, -50.0, 2.2149201778721809837e-2),
    (1.0, 2.3, -100.0, 1.1108759729870154055e-2),
    (1.0, 2.3, -300.0, 3.7104188375751651027e-3),
    (1.0, 2.3, -1000.0, 1.1139080014049482413e-3),
    (1.0, 2.3, -10000.0, 1.1142090789317382341e-4),
    (1.0, 2.3, -100000.0, 1.1142391657963766807e-5),
    (1.0, 2.3, -1000000.0, 1.1142421742743152576e-6),
    (1.0, 2.3, 0.5, 1.0752881419200445704),
    (1.0, 2.3, 2.0, 2.3776704779698580863),
    (1.0, 2.3, 5.0, 1.8080411440201234491e+1),
    (1.0, 3.7, -0.001, 2.3970588748454258254e-1),
    (1.0, 3.7, -0.5, 2.1053501010367751873e-1),
    (1.0, 3.7, -2.0, 1.5052619628040898056e-1),
    (1.0, 3.7, -5.0, 9.211457227923877234e-2),
    (1.0, 3.7, -10.0, 5.4530206915750900447e-2),
    (1.0, 3.7, -20.0, 2.9715522199085026935e-2),
    (1.0, 3.7, -50.0, 1.2513598626091704774e-2),
    (1.0, 3.7, -100.0, 6.3645262523271376621e-3),
    (1.0, 3.7, -300.0, 2.1457363461240951547e-3),
    (1.0, 3.7, -1000.0, 6.4628104998770309698e-4),
    (1.0, 3.7, -10000.0, 6.4727077974213741526e-5),
    (1.0, 3.7, -100000.0, 6.47369821381610111e-6),
    (1.0, 3.7, -1000000.0, 6.4737972623199165791e-7),
    (1.0, 3.7, 0.5, 2.7594556500304788674e-1),
    (1.0, 3.7, 2.0, 4.5158814846650287304e-1),
    (1.0, 3.7, 5.0, 1.7448544391707434871),
    (1.0, 1.0, -0.001, 9.9900049983337499165e-1),
    (1.0, 1.0, -0.5, 6.065306597126334236e-1),
    (1.0, 1.0, -2.0, 1.3533528323661269189e-1),
    (1.0, 1.0, -5.0, 6.7379469990854670966e-3),
    (1.0, 1.0, -10.0, 4.5399929762484851536e-5),
    (1.0, 1.0, -20.0, 2.061153622438557828e-9),
    (1.0, 1.0, -50.0, 1.928749847963917783e-22),
    (1.0, 1.0, -100.0, 3.720075976020835963e-44),
    (1.0, 1.0, -300.0, 5.1482002224120137812e-131),
    (1.0, 1.0, 0.5, 1.6487212707001281468),
    (1.0, 1.0, 2.0, 7.3890560989306502272),
    (1.0, 1.0, 5.0, 1.4841315910257660342e+2),
    (1.0, 2.0, -0.001, 9.9950016662500833193e-1),
    (1.0, 2.0, -0.5, 7.8693868057473315279e-1),
    (1.0, 2.0, -2.0, 4.3233235838169365405e-1),
    (1.0, 2.0, -5.0, 1.9865241060018290658e-1),
    (1.0, 2.0, -10.0, 9.9995460007023751515e-2),
    (1.0, 2.0, -20.0, 4.9999999896942318878e-2),
    (1.0, 2.0, -50.0, 2.0e-2),
    (1.0, 2.0, -100.0, 1.0e-2),
    (1.0, 2.0, -300.0, 3.3333333333333333333e-3),
    (1.0, 2.0, -1000.0, 1.0e-3),
    (1.0, 2.0, -10000.0, 1.0e-4),
    (1.0, 2.0, -100000.0, 1.0e-5),
    (1.0, 2.0, -1000000.0, 1.0e-6),
    (1.0, 2.0, 0.5, 1.2974425414002562937),
    (1.0, 2.0, 2.0, 3.1945280494653251136),
    (1.0, 2.0, 5.0, 2.9482631820515320684e+1),
    (1.3, 0.5, -0.001, 5.6311636721274696605e-1),
    (1.3, 0.5, -0.5, 1.2960117570799378938e-1),
    (1.3, 0.5, -2.0, -3.6998261869320716401e-1),
    (1.3, 0.5, -5.0, -2.141472607194635346e-1),
    (1.3, 0.5, -10.0, 5.4427670078376333579e-3),
    (1.3, 0.5, -20.0, -7.7147106935093357242e-3),
    (1.3, 0.5, -50.0, -3.3722776825410361363e-3),
    (1.3, 0.5, -100.0, -1.71773012655826988e-3),
    (1.3, 0.5, -300.0, -5.7834857502489630255e-4),
    (1.3, 0.5, -1000.0, -1.7404065530093706806e-4),
    (1.3, 0.5, -10000.0, -1.7423826017711231467e-5),
    (1.3, 0.5, -100000.0, -1.7425774541361887987e-6),
    (1.3, 0.5, -1000000.0, -1.7425969120138071932e-7),
    (1.3, 0.5, 0.5, 1.2280236745534972457),
    (1.3, 0.5, 2.0, 5.5938448939412262063),
    (1.3, 0.5, 5.0, 4.498011981909412444e+1),
    (1.3, 1.0, -0.001, 9.9914315936210190899e-1),
    (1.3, 1.0, -0.5, 6.3300793500239903929e-1),
    (1.3, 1.0, -2.0, 5.4347504824621371856e-2),
    (1.3, 1.0, -5.0, -1.3275950847306692671e-1),
    (1.3, 1.0, -10.0, -4.0670092992621639599e-2),
    (1.3, 1.0, -20.0, -1.1841120110029619668e-2),
    (1.3, 1.0, -50.0, -4.7980384927972319513e-3),
    (1.3, 1.0, -100.0, -2.3548792715210654276e-3),
    (1.3, 1.0, -300.0, -7.7521049015207941087e-4),
    (1.3, 1.0, -1000.0, -2.3154826146248248693e-4),
    (1.3, 1.0, -10000.0, -2.3115823948957643618e-5),
    (1.3, 1.0, -100000.0, -2.3111928312440187561e-6),
    (1.3, 1.0, -1000000.0, -2.3111538795172230072e-7),
    (1.3, 1.0, 0.5, 1.5022473445794166625),
    (1.3, 1.0, 2.0, 4.2917217536157314126),
    (1.3, 1.0, 5.0, 2.4236128973796303038e+1),
    (1.3, 1.5, -0.001, 1.1277828298183081906),
    (1.3, 1.5, -0.5, 8.6417614907398479461e-1),
    (1.3, 1.5, -2.0, 3.7628185286168335708e-1),
    (1.3, 1.5, -5.0, 6.3137534373177776619e-2),
    (1.3, 1.5, -10.0, 1.2741251400246502222e-2),
    (1.3, 1.5, -20.0, 1.068122836033187471e-2),
    (1.3, 1.5, -50.0, 4.3075780157949417339e-3),
    (1.3, 1.5, -100.0, 2.1670134143933863931e-3),
    (1.3, 1.5, -300.0, 7.2490530167160380019e-4),
    (1.3, 1.5, -1000.0, 2.1772104207614859868e-4),
    (1.3, 1.5, -10000.0, 2.1781458161673647454e-5),
    (1.3, 1.5, -100000.0, 2.1782385476481996408e-6),
    (1.3, 1.5, -1000000.0, 2.1782478127510540333e-7),
    (1.3, 1.5, 0.5, 1.4662781278827884692),
    (1.3, 1.5, 2.0, 3.1338507199161902102),
    (1.3, 1.5, 5.0, 1.2988085665461865195e+1),
    (1.3, 2.3, -0.001, 8.5684063789809110745e-1),
    (1.3, 2.3, -0.5, 7.3398412999520200542e-1),
    (1.3, 2.3, -2.0, 4.7282624758768934128e-1),
    (1.3, 2.3, -5.0, 2.2655190169461337574e-1),
    (1.3, 2.3, -10.0, 1.0406700929926215191e-1),
    (1.3, 2.3, -20.0, 5.0592056005501474822e-2),
    (1.3, 2.3, -50.0, 2.0095960769855942119e-2),
    (1.3, 2.3, -100.0, 1.0023548792715209383e-2),
    (1.3, 2.3, -300.0, 3.3359173683005065053e-3),
    (1.3, 2.3, -1000.0, 1.0002315482614623544e-3),
    (1.3, 2.3, -10000.0, 1.0000231158239488295e-4),
    (1.3, 2.3, -100000.0, 1.0000023111928311159e-5),
    (1.3, 2.3, -1000000.0, 1.0000002311153878236e-6),
    (1.3, 2.3, 0.5, 1.0044946891588334775),
    (1.3, 2.3, 2.0, 1.6458608768078660425),
    (1.3, 2.3, 5.0, 4.6472257947592619678),
    (1.3, 3.7, -0.001, 2.3972901487264580954e-1),
    (1.3, 3.7, -0.5, 2.2012303333083002146e-1),
    (1.3, 3.7, -2.0, 1.7318134535171391112e-1),
    (1.3, 3.7, -5.0, 1.1516695553325072859e-1),
    (1.3, 3.7, -10.0, 6.9640403917128847459e-2),
    (1.3, 3.7, -20.0, 3.7601712673545794102e-2),
    (1.3, 3.7, -50.0, 1.5678965021071737196e-2),
    (1.3, 3.7, -100.0, 7.9451423247527931823e-3),
    (1.3, 3.7, -300.0, 2.6717916609957699329e-3),
    (1.3, 3.7, -1000.0, 8.0399190362962928474e-4),
    (1.3, 3.7, -10000.0, 8.0493809742825409782e-5),
    (1.3, 3.7, -100000.0, 8.0503270145992226272e-6),
    (1.3, 3.7, -1000000.0, 8.0504216170998464443e-7),
    (1.3, 3.7, 0.5, 2.6189969813515646711e-1),
    (1.3, 3.7, 2.0, 3.4699394879574343725e-1),
    (1.3, 3.7, 5.0, 6.5323278791142782521e-1),
    (1.3, 1.3, -0.001, 1.1135432128734257129),
    (1.3, 1.3, -0.5, 8.0804732952192655659e-1),
    (1.3, 1.3, -2.0, 2.7177493687299805307e-1),
    (1.3, 1.3, -5.0, -1.4188878579639720882e-2),
    (1.3, 1.3, -10.0, -1.4928647057996474268e-2),
    (1.3, 1.3, -20.0, -4.8822418450495085992e-4),
    (1.3, 1.3, -50.0, -1.2920563659273757831e-4),
    (1.3, 1.3, -100.0, -3.118672687261556527e-5),
    (1.3, 1.3, -300.0, -3.380240417020100077e-6),
    (1.3, 1.3, -1000.0, -3.0157669952259381236e-7),
    (1.3, 1.3, -10000.0, -3.0056198772541938367e-9),
    (1.3, 1.3, -100000.0, -3.0046069448323191715e-11),
    (1.3, 1.3, -1000000.0, -3.0045056696719484504e-13),
    (1.3, 1.3, 0.5, 1.5152240688859823834),
    (1.3, 1.3, 2.0, 3.580078429888894879),
    (1.3, 1.3, 5.0, 1.6687195553548647734e+1),
    (1.3, 2.3, -0.001, 8.5684063789809110745e-1),
    (1.3, 2.3, -0.5, 7.3398412999520200542e-1),
    (1.3, 2.3, -2.0, 4.7282624758768934128e-1),
    (1.3, 2.3, -5.0, 2.2655190169461337574e-1),
    (1.3, 2.3, -10.0, 1.0406700929926215191e-1),
    (1.3, 2.3, -20.0, 5.0592056005501474822e-2),
    (1.3, 2.3, -50.0, 2.0095960769855942119e-2),
    (1.3, 2.3, -100.0, 1.0023548792715209383e-2),
    (1.3, 2.3, -300.0, 3.3359173683005065053e-3),
    (1.3, 2.3, -1000.0, 1.0002315482614623544e-3),
    (1.3, 2.3, -10000.0, 1.0000231158239488295e-4),
    (1.3, 2.3, -100000.0, 1.0000023111928311159e-5),
    (1.3, 2.3, -1000000.0, 1.0000002311153878236e-6),
    (1.3, 2.3, 0.5, 1.0044946891588334775),
    (1.3, 2.3, 2.0, 1.6458608768078660425),
    (1.3, 2.3, 5.0, 4.6472257947592619678),
    (1.5, 0.5, -0.001, 5.6318988440720431914e-1),
    (1.5, 0.5, -0.5, 1.3441755684874838367e-1),
    (1.5, 0.5, -2.0, -5.1580780208558239646e-1),
    (1.5, 0.5, -5.0, -4.5863263148464109374e-1),
    (1.5, 0.5, -10.0, 1.0530163581091526914e-1),
    (1.5, 0.5, -20.0, 3.9853399472427007511e-2),
    (1.5, 0.5, -50.0, 5.806096255203032174e-3),
    (1.5, 0.5, -100.0, 1.9002950316754193122e-4),
    (1.5, 0.5, -300.0, 1.1741769462393248535e-5),
    (1.5, 0.5, -1000.0, 1.0577638703505477005e-6),
    (1.5, 0.5, -10000.0, 1.0578545527885400385e-8),
    (1.5, 0.5, -100000.0, 1.0578554599883704162e-10),
    (1.5, 0.5, -1000000.0, 1.0578554690604063081e-12),
    (1.5, 0.5, 0.5, 1.1448466286155243258),
    (1.5, 0.5, 2.0, 4.1636279886572213983),
    (1.5, 0.5, 5.0, 2.1241803705531387334e+1),
    (1.5, 1.0, -0.001, 9.9924791386949954796e-1),
    (1.5, 1.0, -0.5, 6.6323679487242795678e-1),
    (1.5, 1.0, -2.0, 2.9430685602826471728e-2),
    (1.5, 1.0, -5.0, -3.000820504131308808e-1),
    (1.5, 1.0, -10.0, -1.0971305425274014669e-1),
    (1.5, 1.0, -20.0, 1.9595747930187505735e-2),
    (1.5, 1.0, -50.0, -4.5783851058392779913e-3),
    (1.5, 1.0, -100.0, -2.7898467733372399413e-3),
    (1.5, 1.0, -300.0, -9.4017897679972699932e-4),
    (1.5, 1.0, -1000.0, -2.8209108987501466549e-4),
    (1.5, 1.0, -10000.0, -2.8209475474899628667e-5),
    (1.5, 1.0, -100000.0, -2.8209479140362873523e-6),
    (1.5, 1.0, -1000000.0, -2.8209479177017564933e-7),
    (1.5, 1.0, 0.5, 1.4202702357049505227),
    (1.5, 1.0, 2.0, 3.3487008963183954036),
    (1.5, 1.0, 5.0, 1.2457289126443951234e+1),
    (1.5, 1.5, -0.001, 1.1278792530589258393),
    (1.5, 1.5, -0.5, 8.9886307554606876232e-1),
    (1.5, 1.5, -2.0, 4.1340965905490819621e-1),
    (1.5, 1.5, -5.0, 4.5397084964453794347e-3),
    (1.5, 1.5, -10.0, -6.3386339712500377276e-2),
    (1.5, 1.5, -20.0, 6.1985012468613419281e-3),
    (1.5, 1.5, -50.0, -2.833110656227309145e-4),
    (1.5, 1.5, -100.0, -4.0187938178347689031e-5),
    (1.5, 1.5, -300.0, -4.6994920868398389428e-6),
    (1.5, 1.5, -1000.0, -4.2312553090068829732e-7),
    (1.5, 1.5, -10000.0, -4.2314202104902754904e-9),
    (1.5, 1.5, -100000.0, -4.2314218599469489597e-11),
    (1.5, 1.5, -1000000.0, -4.2314218764415599158e-13),
    (1.5, 1.5, 0.5, 1.4009479593700924487),
    (1.5, 1.5, 2.0, 2.5483367190728557478),
    (1.5, 1.5, 5.0, 7.2468424375621484878),
    (1.5, 2.3, -0.001, 8.5689661820466057633e-1),
    (1.5, 2.3, -0.5, 7.569149821674337842e-1),
    (1.5, 2.3, -2.0, 5.2158191711379012564e-1),
    (1.5, 2.3, -5.0, 2.5252939262024795212e-1),
    (1.5, 2.3, -10.0, 9.2495719296537789689e-2),
    (1.5, 2.3, -20.0, 4.1291141760142978803e-2),
    (1.5, 2.3, -50.0, 1.7221342249457518798e-2),
    (1.5, 2.3, -100.0, 8.6117762684877439352e-3),
    (1.5, 2.3, -300.0, 2.8657060229008336701e-3),
    (1.5, 2.3, -1000.0, 8.5917055269124493496e-4),
    (1.5, 2.3, -10000.0, 8.589604137781886557e-5),
    (1.5, 2.3, -100000.0, 8.5893935908857941628e-6),
    (1.5, 2.3, -1000000.0, 8.5893725321514058733e-7),
    (1.5, 2.3, 0.5, 9.704486836657956588e-1),
    (1.5, 2.3, 2.0, 1.4061976668085817451),
    (1.5, 2.3, 5.0, 2.9137554360098496246),
    (1.5, 3.7, -0.001, 2.397399835325432638e-1),
    (1.5, 3.7, -0.5, 2.25011473443590306e-1),
    (1.5, 3.7, -2.0, 1.8707853950905747536e-1),
    (1.5, 3.7, -5.0, 1.3313080239280108577e-1),
    (1.5, 3.7, -10.0, 8.2816576224369411105e-2),
    (1.5, 3.7, -20.0, 4.3551049374856599478e-2),
    (1.5, 3.7, -50.0, 1.7843938862174317986e-2),
    (1.5, 3.7, -100.0, 8.9988378174588158348e-3),
    (1.5, 3.7, -300.0, 3.0167794334371455329e-3),
    (1.5, 3.7, -1000.0, 9.068331274658247928e-4),
    (1.5, 3.7, -10000.0, 9.075266441549858054e-5),
    (1.5, 3.7, -100000.0, 9.0759598036601620344e-6),
    (1.5, 3.7, -1000000.0, 9.0760291383192204299e-7),
    (1.5, 3.7, 0.5, 2.5574001388412736184e-1),
    (1.5, 3.7, 2.0, 3.1198720761066673148e-1),
    (1.5, 3.7, 5.0, 4.7423333353583936508e-1),
    (1.5, 1.5, -0.001, 1.1278792530589258393),
    (1.5, 1.5, -0.5, 8.9886307554606876232e-1),
    (1.5, 1.5, -2.0, 4.1340965905490819621e-1),
    (1.5, 1.5, -5.0, 4.5397084964453794347e-3),
    (1.5, 1.5, -10.0, -6.3386339712500377276e-2),
    (1.5, 1.5, -20.0, 6.1985012468613419281e-3),
    (1.5, 1.5, -50.0, -2.833110656227309145e-4),
    (1.5, 1.5, -100.0, -4.0187938178347689031e-5),
    (1.5, 1.5, -300.0, -4.6994920868398389428e-6),
    (1.5, 1.5, -1000.0, -4.2312553090068829732e-7),
    (1.5, 1.5, -10000.0, -4.2314202104902754904e-9),
    (1.5, 1.5, -100000.0, -4.2314218599469489597e-11),
    (1.5, 1.5, -1000000.0, -4.2314218764415599158e-13),
    (1.5, 1.5, 0.5, 1.4009479593700924487),
    (1.5, 1.5, 2.0, 2.5483367190728557478),
    (1.5, 1.5, 5.0, 7.2468424375621484878),
    (1.5, 2.5, -0.001, 7.5208613050045202372e-1),
    (1.5, 2.5, -0.5, 6.7352641025514408644e-1),
    (1.5, 2.5, -2.0, 4.8528465719858676414e-1),
    (1.5, 2.5, -5.0, 2.6001641008262617616e-1),
    (1.5, 2.5, -10.0, 1.1097130542527401467e-1),
    (1.5, 2.5, -20.0, 4.9020212603490624713e-2),
    (1.5, 2.5, -50.0, 2.009156770211678556e-2),
    (1.5, 2.5, -100.0, 1.0027898467733372399e-2),
    (1.5, 2.5, -300.0, 3.33646726325599909e-3),
    (1.5, 2.5, -1000.0, 1.0002820910898750147e-3),
    (1.5, 2.5, -10000.0, 1.0000282094754748996e-4),
    (1.5, 2.5, -100000.0, 1.0000028209479140363e-5),
    (1.5, 2.5, -1000000.0, 1.0000002820947917702e-6),
    (1.5, 2.5, 0.5, 8.4054047140990104536e-1),
    (1.5, 2.5, 2.0, 1.1743504481591977018),
    (1.5, 2.5, 5.0, 2.2914578252887902467),
    (1.8, 0.5, -0.001, 5.6333262070226615404e-1),
    (1.8, 0.5, -0.5, 1.7111934140260703129e-1),
    (1.8, 0.5, -2.0, -6.3636413040499053633e-1),
    (1.8, 0.5, -5.0, -1.0845757973966013001),
    (1.8, 0.5, -10.0, -3.1009353207987231071e-1),
    (1.8, 0.5, -20.0, 1.0116321995908551234),
    (1.8, 0.5, -50.0, -7.0666851075114553109e-1),
    (1.8, 0.5, -100.0, 2.2278724756717865551e-1),
    (1.8, 0.5, -300.0, 5.9006858980648306795e-2),
    (1.8, 0.5, -1000.0, -1.7507891572879383183e-3),
    (1.8, 0.5, -10000.0, 3.0038232363990368088e-5),
    (1.8, 0.5, -100000.0, 3.0044273960112757708e-6),
    (1.8, 0.5, -1000000.0, 3.0044877158685818909e-7),
    (1.8, 0.5, 0.5, 1.0306981308169476283),
    (1.8, 0.5, 2.0, 2.9506044535776853872),
    (1.8, 0.5, 5.0, 1.0007809890975091664e+1),
    (1.8, 1.0, -0.001, 9.9940359068595322791e-1),
    (1.8, 1.0, -0.5, 7.1992993686215541459e-1),
    (1.8, 1.0, -2.0, 7.4769050732541704966e-2),
    (1.8, 1.0, -5.0, -5.5853121273430461731e-1),
    (1.8, 1.0, -10.0, -5.6057491254512572606e-1),
    (1.8, 1.0, -20.0, 2.0184270449898259242e-1),
    (1.8, 1.0, -50.0, -1.7643515585736695824e-1),
    (1.8, 1.0, -100.0, 1.1494392481354926256e-1),
    (1.8, 1.0, -300.0, -3.1536759551233470548e-3),
    (1.8, 1.0, -1000.0, -2.2825113947463849606e-4),
    (1.8, 1.0, -10000.0, -1.7414751467992937997e-5),
    (1.8, 1.0, -100000.0, -1.7424865614726938704e-6),
    (1.8, 1.0, -1000000.0, -1.7425878212563383237e-7),
    (1.8, 1.0, 0.5, 1.3174522105892546258),
    (1.8, 1.0, 2.0, 2.5273175608171323379),
    (1.8, 1.0, 5.0, 6.461663638537766993),
    (1.8, 1.5, -0.001, 1.1280065465380124903),
    (1.8, 1.5, -0.5, 9.5079507120693837296e-1),
    (1.8, 1.5, -2.0, 5.1360610184129450278e-1),
    (1.8, 1.5, -5.0, -2.2345785462162464772e-2),
    (1.8, 1.5, -10.0, -3.0020254873335537825e-1),
    (1.8, 1.5, -20.0, -8.3242434827310167126e-2),
    (1.8, 1.5, -50.0, 1.3748780825231048847e-3),
    (1.8, 1.5, -100.0, 2.2394082332696689795e-2),
    (1.8, 1.5, -300.0, -3.8891418318369758827e-3),
    (1.8, 1.5, -1000.0, -1.9711668619681732039e-4),
    (1.8, 1.5, -10000.0, -2.3109331822228255872e-5),
    (1.8, 1.5, -100000.0, -2.3111279330793997975e-6),
    (1.8, 1.5, -1000000.0, -2.3111473899305248744e-7),
    (1.8, 1.5, 0.5, 1.3238698978860279775),
    (1.8, 1.5, 2.0, 2.0310665421863628833),
    (1.8, 1.5, 5.0, 4.1281662757746605763),
    (1.8, 2.3, -0.001, 8.569628454901330045e-1),
    (1.8, 2.3, -0.5, 7.8614048429029860548e-1),
    (1.8, 2.3, -2.0, 6.0027685697637345573e-1),
    (1.8, 2.3, -5.0, 3.2975307618887149743e-1),
    (1.8, 2.3, -10.0, 8.7428311562762801762e-2),
    (1.8, 2.3, -20.0, -2.2372130802154977014e-2),
    (1.8, 2.3, -50.0, 2.5417161885978037685e-2),
    (1.8, 2.3, -100.0, 3.4140233598057739926e-3),
    (1.8, 2.3, -300.0, 1.683942415223692225e-3),
    (1.8, 2.3, -1000.0, 5.6594037270504398132e-4),
    (1.8, 2.3, -10000.0, 5.6415954531539205058e-5),
    (1.8, 2.3, -100000.0, 5.6418657912036002969e-6),
    (1.8, 2.3, -1000000.0, 5.6418928309898445411e-7),
    (1.8, 2.3, 0.5, 9.3301709453838281878e-1),
    (1.8, 2.3, 2.0, 1.1932074350149647642),
    (1.8, 2.3, 5.0, 1.888724061485467514),
    (1.8, 3.7, -0.001, 2.3975157253871771446e-1),
    (1.8, 3.7, -0.5, 2.3041241065851254423e-1),
    (1.8, 3.7, -2.0, 2.0455244335055104861e-1),
    (1.8, 3.7, -5.0, 1.6161277254572447414e-1),
    (1.8, 3.7, -10.0, 1.1044486349742343104e-1),
    (1.8, 3.7, -20.0, 5.6142543872202173976e-2),
    (1.8, 3.7, -50.0, 2.0279796028464268745e-2),
    (1.8, 3.7, -100.0, 1.0369427816480403212e-2),
    (1.8, 3.7, -300.0, 3.468099720870434754e-3),
    (1.8, 3.7, -1000.0, 1.0396384522504118003e-3),
    (1.8, 3.7, -10000.0, 1.0397436269517213865e-4),
    (1.8, 3.7, -100000.0, 1.0397530832504050091e-5),
    (1.8, 3.7, -1000000.0, 1.039754029234333535e-6),
    (1.8, 3.7, 0.5, 2.4952224602514620133e-1),
    (1.8, 3.7, 2.0, 2.8129222565997258363e-1),
    (1.8, 3.7, 5.0, 3.5769151804066378632e-1),
    (1.8, 1.8, -0.001, 1.0734022640111037501),
    (1.8, 1.8, -0.5, 9.4464310436027946919e-1),
    (1.8, 1.8, -2.0, 6.1806116076589233253e-1),
    (1.8, 1.8, -5.0, 1.8426013587150499919e-1),
    (1.8, 1.8, -10.0, -1.1736717296966807903e-1),
    (1.8, 1.8, -20.0, -9.2868206049522574387e-2),
    (1.8, 1.8, -50.0, 2.3734975957787473021e-2),
    (1.8, 1.8, -100.0, 4.8721392369852207368e-3),
    (1.8, 1.8, -300.0, -1.4204674212744370162e-3),
    (1.8, 1.8, -1000.0, 1.5092516281766023147e-5),
    (1.8, 1.8, -10000.0, -3.1326303654183286852e-9),
    (1.8, 1.8, -100000.0, -3.136273312949207817e-11),
    (1.8, 1.8, -1000000.0, -3.1366378241178288868e-13),
    (1.8, 1.8, 0.5, 1.2139135959501588875),
    (1.8, 1.8, 2.0, 1.7094525975204160363),
    (1.8, 1.8, 5.0, 3.1153679677474528754),
    (1.8, 2.8, -0.001, 5.9640931404677218393e-1),
    (1.8, 2.8, -0.5, 5.6014012627568927082e-1),
    (1.8, 2.8, -2.0, 4.6261547463372921803e-1),
    (1.8, 2.8, -5.0, 3.1170624254686095176e-1),
    (1.8, 2.8, -10.0, 1.5605749125451256501e-1),
    (1.8, 2.8, -20.0, 3.9907864775050852143e-2),
    (1.8, 2.8, -50.0, 2.3528703117147339517e-2),
    (1.8, 2.8, -100.0, 8.8505607518645054844e-3),
    (1.8, 2.8, -300.0, 3.3438455865170773778e-3),
    (1.8, 2.8, -1000.0, 1.0002282511394745104e-3),
    (1.8, 2.8, -10000.0, 1.0000174147514678648e-4),
    (1.8, 2.8, -100000.0, 1.0000017424865613445e-5),
    (1.8, 2.8, -1000000.0, 1.0000001742587819975e-6),
    (1.8, 2.8, 0.5, 6.349044211785093751e-1),
    (1.8, 2.8, 2.0, 7.6365878040856633426e-1),
    (1.8, 2.8, 5.0, 1.0923327277075536766),
    (1.95, 0.5, -0.001, 5.6341099275123893834e-1),
    (1.95, 0.5, -0.5, 1.9894874606216478815e-1),
    (1.95, 0.5, -2.0, -6.3318068502247353993e-1),
    (1.95, 0.5, -5.0, -1.3672566512363786044),
    (1.95, 0.5, -10.0, -9.5857680242042057559e-1),
    (1.95, 0.5, -20.0, 1.2476134559029459518),
    (1.95, 0.5, -50.0, -7.6233064337933364412e-1),
    (1.95, 0.5, -100.0, 8.7153374218292075449e-1),
    (1.95, 0.5, -300.0, 1.7553357778696320701),
    (1.95, 0.5, -1000.0, -1.0751765392935623092),
    (1.95, 0.5, -10000.0, 1.1586321121831862042e-1),
    (1.95, 0.5, -100000.0, -2.5462200073771313438e-6),
    (1.95, 0.5, -1000000.0, 4.0374063655410995259e-7),
    (1.95, 0.5, 0.5, 9.7877251755767561381e-1),
    (1.95, 0.5, 2.0, 2.5542676267086035504),
    (1.95, 0.5, 5.0, 7.5636566499796406874),
    (1.95, 1.0, -0.001, 9.9947669841013391659e-1),
    (1.95, 1.0, -0.5, 7.501942028587329249e-1),
    (1.95, 1.0, -2.0, 1.3274425173998842955e-1),
    (1.95, 1.0, -5.0, -6.1438596920273951082e-1),
    (1.95, 1.0, -10.0, -8.9677713107565380281e-1),
    (1.95, 1.0, -20.0, -6.0338132941290635514e-2),
    (1.95, 1.0, -50.0, 3.1283380020594431007e-1),
    (1.95, 1.0, -100.0, -2.5853197930815624302e-1),
    (1.95, 1.0, -300.0, 4.7138956281480668454e-1),
    (1.95, 1.0, -1000.0, -2.5504420325020132983e-1),
    (1.95, 1.0, -10000.0, 8.7525301509999123815e-3),
    (1.95, 1.0, -100000.0, -5.7946306076247475848e-7),
    (1.95, 1.0, -1000000.0, -4.8792279855015259038e-8),
    (1.95, 1.0, 0.5, 1.2740032492859164299),
    (1.95, 1.0, 2.0, 2.255554501258828484),
    (1.95, 1.0, 5.0, 5.0812517750939102609),
    (1.95, 1.5, -0.001, 1.1280613570886418452),
    (1.95, 1.5, -0.5, 9.7497997645103692609e-1),
    (1.95, 1.5, -2.0, 5.7688984053859540833e-1),
    (1.95, 1.5, -5.0, 1.8115863076812815369e-2),
    (1.95, 1.5, -10.0, -4.0647446757242978226e-1),
    (1.95, 1.5, -20.0, -3.1510546905318743776e-1),
    (1.95, 1.5, -50.0, 2.5760142578335391645e-1),
    (1.95, 1.5, -100.0, -1.9428728580904458843e-1),
    (1.95, 1.5, -300.0, 5.6294793428368936424e-2),
    (1.95, 1.5, -1000.0, -2.925003599637864343e-2),
    (1.95, 1.5, -10000.0, 8.6668484746928083485e-5),
    (1.95, 1.5, -100000.0, -2.7730153987854651297e-6),
    (1.95, 1.5, -1000000.0, -2.7844303199222549802e-7),
    (1.95, 1.5, 0.5, 1.2929910322789127625),
    (1.95, 1.5, 2.0, 1.8596608772005597809),
    (1.95, 1.5, 5.0, 3.376013261851417428),
    (1.95, 2.3, -0.001, 8.5698892904231824277e-1),
    (1.95, 2.3, -0.5, 7.9821778935567860578e-1),
    (1.95, 2.3, -2.0, 6.3818696482041652408e-1),
    (1.95, 2.3, -5.0, 3.8419425716203749386e-1),
    (1.95, 2.3, -10.0, 1.1391851182222138372e-1),
    (1.95, 2.3, -20.0, -7.6942812597723976565e-2),
    (1.95, 2.3, -50.0, 4.0342073851214451269e-2),
    (1.95, 2.3, -100.0, -1.4937292385025594084e-2),
    (1.95, 2.3, -300.0, -6.09157632185442671e-3),
    (1.95, 2.3, -1000.0, 1.7434460877802794926e-3),
    (1.95, 2.3, -10000.0, 1.7285201137092392068e-5),
    (1.95, 2.3, -100000.0, 3.9276373229644079011e-6),
    (1.95, 2.3, -1000000.0, 3.9274987147630080265e-7),
    (1.95, 2.3, 0.5, 9.1895321702670600315e-1),
    (1.95, 2.3, 2.0, 1.123326467744732766),
    (1.95, 2.3, 5.0, 1.6279274650660588651),
    (1.95, 3.7, -0.001, 2.3975570689707317428e-1),
    (1.95, 3.7, -0.5, 2.3239456810036080439e-1),
    (1.95, 3.7, -2.0, 2.1152988738695909507e-1),
    (1.95, 3.7, -5.0, 1.7502072909144176286e-1),
    (1.95, 3.7, -10.0, 1.2729310985945470998e-1),
    (1.95, 3.7, -20.0, 6.7663510315736402273e-2),
    (1.95, 3.7, -50.0, 1.8457106665003693222e-2),
    (1.95, 3.7, -100.0, 1.203518218412967771e-2),
    (1.95, 3.7, -300.0, 3.605025983442455637e-3),
    (1.95, 3.7, -1000.0, 1.0940048324638322012e-3),
    (1.95, 3.7, -10000.0, 1.0881746033582001864e-4),
    (1.95, 3.7, -100000.0, 1.0880669660192840988e-5),
    (1.95, 3.7, -1000000.0, 1.0880654239180877203e-6),
    (1.95, 3.7, 0.5, 2.47366572634744591e-1),
    (1.95, 3.7, 2.0, 2.7153058846414494267e-1),
    (1.95, 3.7, 5.0, 3.2660349964701371376e-1),
    (1.95, 1.95, -0.001, 1.0203437558448558292),
    (1.95, 1.95, -0.5, 9.2882957331197771969e-1),
    (1.95, 1.95, -2.0, 6.8379906943884867676e-1),
    (1.95, 1.95, -5.0, 3.1139841865295518353e-1),
    (1.95, 1.95, -10.0, -4.5059094360952979035e-2),
    (1.95, 1.95, -20.0, -1.9769945733375128153e-1),
    (1.95, 1.95, -50.0, 1.047492771876730906e-1),
    (1.95, 1.95, -100.0, -6.6543233035290150136e-2),
    (1.95, 1.95, -300.0, -5.6782153219562221863e-3),
    (1.95, 1.95, -1000.0, -5.130813398168574373e-5),
    (1.95, 1.95, -10000.0, -7.1676722701088668303e-5),
    (1.95, 1.95, -100000.0, 1.4009771317860078692e-9),
    (1.95, 1.95, -1000000.0, -9.5143929316336171644e-14),
    (1.95, 1.95, 0.5, 1.117606718168341608),
    (1.95, 1.95, 2.0, 1.4433528754435345567),
    (1.95, 1.95, 5.0, 2.2727863353023201177),
    (1.95, 2.95, -0.001, 5.2330158986608329667e-1),
    (1.95, 2.95, -0.5, 4.9961159428253405307e-1),
    (1.95, 2.95, -2.0, 4.3362787413000570931e-1),
    (1.95, 2.95, -5.0, 3.2287719384054786018e-1),
    (1.95, 2.95, -10.0, 1.8967771310756537489e-1),
    (1.95, 2.95, -20.0, 5.301690664706455281e-2),
    (1.95, 2.95, -50.0, 1.3743323995881114279e-2),
    (1.95, 2.95, -100.0, 1.2585319793081564587e-2),
    (1.95, 2.95, -300.0, 1.7620347906173126337e-3),
    (1.95, 2.95, -1000.0, 1.2550442032502012545e-3),
    (1.95, 2.95, -10000.0, 9.912474698490002274e-5),
    (1.95, 2.95, -100000.0, 1.0000005794630608906e-5),
    (1.95, 2.95, -1000000.0, 1.0000000487922799832e-6),
    (1.95, 2.95, 0.5, 5.4800649857183274677e-1),
    (1.95, 2.95, 2.0, 6.2777725062941410203e-1),
    (1.95, 2.95, 5.0, 8.1625035501878184631e-1),
    (2.0, 0.5, -0.001, 5.6343741673796514165e-1),
    (2.0, 0.5, -0.5, 2.0912635617420197617e-1),
    (2.0, 0.5, -2.0, -6.231055547334122767e-1),
    (2.0, 0.5, -5.0, -1.4400945980289062494),
    (2.0, 0.5, -10.0, -1.2035813211302018843),
    (2.0, 0.5, -20.0, 1.1127389733030890856),
    (2.0, 0.5, -50.0, 7.9223703312524458906e-4),
    (2.0, 0.5, -100.0, -6.5582666820278477561e-1),
    (2.0, 0.5, -300.0, 3.0644620687823038965),
    (2.0, 0.5, -1000.0, 3.0753519275146754801),
    (2.0, 0.5, -10000.0, 9.678103284568436312),
    (2.0, 0.5, -100000.0, -1.7051930911964224202e+1),
    (2.0, 0.5, -1000000.0, -5.9144097580994964839),
    (2.0, 0.5, 0.5, 9.6224759086368434313e-1),
    (2.0, 0.5, 2.0, 2.4415397363594739745),
    (2.0, 0.5, 5.0, 6.9563564001825960768),
    (2.0, 1.0, -0.001, 9.9950004166527780257e-1),
    (2.0, 1.0, -0.5, 7.6024459707563015125e-1),
    (2.0, 1.0, -2.0, 1.5594369476537447345e-1),
    (2.0, 1.0, -5.0, -6.1727287645716659406e-1),
    (2.0, 1.0, -10.0, -9.9978607287932590758e-1),
    (2.0, 1.0, -20.0, -2.3794839198059109428e-1),
    (2.0, 1.0, -50.0, 7.0534790630844231151e-1),
    (2.0, 1.0, -100.0, -8.3907152907645245226e-1),
    (2.0, 1.0, -300.0, 4.173635451569764014e-2),
    (2.0, 1.0, -1000.0, 9.7868269655989227828e-1),
    (2.0, 1.0, -10000.0, 8.623188722876839341e-1),
    (2.0, 1.0, -100000.0, -4.774096380386807274e-1),
    (2.0, 1.0, -1000000.0, 5.6237907629070299108e-1),
    (2.0, 1.0, 0.5, 1.2605918365213561195),
    (2.0, 1.0, 2.0, 2.178183556608570864),
    (2.0, 1.0, 5.0, 4.7316734711307665526),
    (2.0, 1.5, -0.001, 1.1280782850885851701),
    (2.0, 1.5, -0.5, 9.8263854078936766514e-1),
    (2.0, 1.5, -2.0, 5.9885253919529041819e-1),
    (2.0, 1.5, -5.0, 3.9679821460639227625e-2),
    (2.0, 1.5, -10.0, -4.2856990515225806304e-1),
    (2.0, 1.5, -20.0, -4.1672277769801668448e-1),
    (2.0, 1.5, -50.0, 3.7075494623702779551e-1),
    (2.0, 1.5, -100.0, -3.119968572288061946e-1),
    (2.0, 1.5, -300.0, -1.6359430602429577121e-1),
    (2.0, 1.5, -1000.0, 1.4860671454393004516e-1),
    (2.0, 1.5, -10000.0, 2.5141495437892635796e-2),
    (2.0, 1.5, -100000.0, 1.5953141646907018382e-2),
    (2.0, 1.5, -1000000.0, 3.1064484961695090052e-2),
    (2.0, 1.5, 0.5, 1.2836732574942241612),
    (2.0, 1.5, 2.0, 1.8110127778007600933),
    (2.0, 1.5, 5.0, 3.1828168630309416076),
    (2.0, 2.3, -0.001, 8.5699670074552961765e-1),
    (2.0, 2.3, -0.5, 8.0187192542252751006e-1),
    (2.0, 2.3, -2.0, 6.5023760004917159118e-1),
    (2.0, 2.3, -5.0, 4.0372387978620686509e-1),
    (2.0, 2.3, -10.0, 1.2844192852362294743e-1),
    (2.0, 2.3, -20.0, -9.2078273870161921239e-2),
    (2.0, 2.3, -50.0, 3.1036980676058480575e-2),
    (2.0, 2.3, -100.0, -1.8959351675143785936e-3),
    (2.0, 2.3, -300.0, -2.1201097791476990149e-2),
    (2.0, 2.3, -1000.0, -2.5981728935593719512e-3),
    (2.0, 2.3, -10000.0, -2.0832420790731915185e-3),
    (2.0, 2.3, -100000.0, 5.6548708712097318908e-4),
    (2.0, 2.3, -1000000.0, 6.0944016085059825343e-5),
    (2.0, 2.3, 0.5, 9.1482503068648418315e-1),
    (2.0, 2.3, 2.0, 1.1036669225116424929),
    (2.0, 2.3, 5.0, 1.5599961876665577688),
    (2.0, 3.7, -0.001, 2.3975688909771190887e-1),
    (2.0, 3.7, -0.5, 2.3296634038864550669e-1),
    (2.0, 3.7, -2.0, 2.1359681725271129064e-1),
    (2.0, 3.7, -5.0, 1.7921497870774455213e-1),
    (2.0, 3.7, -10.0, 1.3309211619409061851e-1),
    (2.0, 3.7, -20.0, 7.260495262980506217e-2),
    (2.0, 3.7, -50.0, 1.7257774837296422459e-2),
    (2.0, 3.7, -100.0, 1.2755183379394364893e-2),
    (2.0, 3.7, -300.0, 4.0655331297953930414e-3),
    (2.0, 3.7, -1000.0, 1.0448691411186363797e-3),
    (2.0, 3.7, -10000.0, 1.1029468322858990135e-4),
    (2.0, 3.7, -100000.0, 1.0904816155203365434e-5),
    (2.0, 3.7, -1000000.0, 1.0926673459239127e-6),
    (2.0, 3.7, 0.5, 2.4675553574163740546e-1),
    (2.0, 3.7, 2.0, 2.6883446128010540018e-1),
    (2.0, 3.7, 5.0, 3.1844298269297294664e-1),
    (2.0, 2.0, -0.001, 9.9983334166646825672e-1),
    (2.0, 2.0, -0.5, 9.1872536986556843778e-1),
    (2.0, 2.0, -2.0, 6.9845599863660835984e-1),
    (2.0, 2.0, -5.0, 3.5184490787569899038e-1),
    (2.0, 2.0, -10.0, -6.5407069689386402128e-3),
    (2.0, 2.0, -20.0, -2.1718431835123950447e-1),
    (2.0, 2.0, -50.0, 1.0024812527586706814e-1),
    (2.0, 2.0, -100.0, -5.440211108893698134e-2),
    (2.0, 2.0, -300.0, -5.7684720007749597155e-2),
    (2.0, 2.0, -1000.0, 6.4946269680604301001e-3),
    (2.0, 2.0, -10000.0, -5.0636564110975879366e-3),
    (2.0, 2.0, -100000.0, 2.7786328248039103806e-3),
    (2.0, 2.0, -1000000.0, 8.2687954053200256026e-4),
    (2.0, 2.0, 0.5, 1.0854416412726070019),
    (2.0, 2.0, 2.0, 1.368298872008590679),
    (2.0, 2.0, 5.0, 2.0682714443419982148),
    (2.0, 3.0, -0.001, 4.9995833472219742091e-1),
    (2.0, 3.0, -0.5, 4.7951080584873969749e-1),
    (2.0, 3.0, -2.0, 4.2202815261731276327e-1),
    (2.0, 3.0, -5.0, 3.2345457529143331881e-1),
    (2.0, 3.0, -10.0, 1.9997860728793259076e-1),
    (2.0, 3.0, -20.0, 6.1897419599029554714e-2),
    (2.0, 3.0, -50.0, 5.8930418738311537697e-3),
    (2.0, 3.0, -100.0, 1.8390715290764524523e-2),
    (2.0, 3.0, -300.0, 3.1942121516143411995e-3),
    (2.0, 3.0, -1000.0, 2.1317303440107721723e-5),
    (2.0, 3.0, -10000.0, 1.376811277123160659e-5),
    (2.0, 3.0, -100000.0, 1.4774096380386807274e-5),
    (2.0, 3.0, -1000000.0, 4.3762092370929700892e-7),
    (2.0, 3.0, 0.5, 5.2118367304271223895e-1),
    (2.0, 3.0, 2.0, 5.8909177830428543199e-1),
    (2.0, 3.0, 5.0, 7.4633469422615331052e-1),
];
