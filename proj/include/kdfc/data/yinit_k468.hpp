#pragma once

// Generated by tools/gen_yinit.cpp; identical to data/kdfc_yinit_k468.txt.

namespace kdfc::data {

inline constexpr const char* kYInitK468Text = R"YINIT(# kdfc-yinit v1 m=32 iterations=468 width=500 seed=0x4b444643 rng=mt19937_64 table=fnv1a64:ba5993366270842f
7169900eef21850c35bd720b28ab06b412b35098a4f7db75747aa4ba91c16e5ce2f08c393ab9d269bc9cbdcf5dddd46c9db265a25cd68373cd46202a82a82
abe88d964c134eec938d0bb300b371d202cf5b5c8b2c933e8251be18217bba1655a194bfb65bd78add87e420fb7bc4dea0aaeb69f97b7bd68bb0be8feb9e0
9042636025d16a8986db001170da9b5673a670c35f06d438c7ef94e69734e9de84137f3a0058201030550919858a1a61280530351ea48fac427d82b5aef3b
03a611d739ec5748dab3b009290f72be2dbdf99b4eb40a4babc1e0011e88a3b7e1c2667f91b0f3897105f634800fdc949529df528bbf0a361dc2001db83d8
748b39113d116c58c313e2bdce6a1c99a2e5f41971bb616490e731c2365c91cd6e8657bf03e11827c6bc73b36d8cb218a6eae5e9ce3b448cd9bce38ecdca7
deb7e728afe2f917271959f495a38534952ace770854d8e83c855f2e5b12dab44423b31f76dc3370e7f74031f8f7e816ab3cc555fbae24ddb855bee8bdb4c
14f35b7f10dcadd793cbc2cdf77f3e52a6d448eb7997b6212177769e0d938716cf9128431576ee1a4ca551b2da31679730c843000686060d0d79d89fe41d3
882883bebaa8f69955d1773a228c9001dd52118ac214fed026cc31caa881a7c86eefb2488f3f33d6657f090b6586680f458a8ebeeadcf66f5d470c7b9eff5
344ef4c489a4c80a28b62dbbe7eb761fc3b06338b070dbdcc795220892785dd63cea20fb71edf101d452ac9cff471298a99b300d2a84a6721140c8255dc4e
6eefce197aefb9a5bf6c250f9ca3fdbb52b73c153dd5444b8bdce15614b1abc4e3e61f644f2dc258c3417b78fb951b072fa4b9666fe5b1177a79793a79950
4eda721d89301d97bb5b450bbfdf5b5cec4c22442b7f0f8d65a04658aead3d1de1bbc29bdedef6d8f4dfcfda5079155f3b1c477130379f8bad1c0ca197b21
07ec4d7c3721c993b245578908cbb9b329c28fdb83cd3c9bdfd32cb9563504734d825d857e5d33bdb2cbe8ab3877d3a4fbe070951b9967ca3122b428192e7
0d2d586ecace8ee8210eb5083349d4dd18b406f48ddc58f79dce18e5613dcb4836d4cc80f0f81f4416d5b424f2688f22ad75be1785f7061053edc8b888ab9
0a0b96bc22251d4df08b4d2ad04e1cdae270a551cac8cb8528834e0ca624f63343ae3c48ff9ee670ca563f2aba60f15a8e943d6f001438da32e3c467f8463
d6c1221373f6bc2c35ce58f1848ff09a14cdead54b93937ac4db51a93fb71928e1a04c68921fa9c08998adb952c8e33d58174f3625e90f8124efabb6039f5
4dee3e43c05daf4b2297ee17c288c63895c9f05b6510d348c65e2693b696920180389d31a6fb1e30e4b10c3eb39d155f2c549124516f7602a78d1f73d5036
7e6226e674f72fcb4be427a50d6897e8bd6465e85b06b724c78ecc0d6bad21db2e3a172ff5999262fb93d89ab0af50e829d57bca2c2bf3dff670d13acb229
e671a346da82d037181350a15e96c274fb90a52bc230c10cc7da045d3310fb5f87bebc730bada051921e6a006e5f41f076a695f252e362e246d8e206c4903
119332c8b40669260c9bacc8031c1945631257ebe616edcd7d265d445cc02e72158add5886c14250f66fa29a5b58b2496e706bc04c880291fa7c4436d10ea
3681e94b640e36a10b727b3be2f6ddabfec87ddf1e5b1a3a156f1943bddd68a5d61ecffe7c392bcc60b5512cd90ef316734823f01d6f26b39383331ed4dae
00000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000008
86c0fd9c1db0a7a9755c08e488ddbba55090d1b842c47ae6c114b597d86583b710ce8b9fbb338a19587b90c03609b8f17ec317fafcf88cdb0055f758fe9eb
f94767f282a6901e59923e4d8e909bda7b2a10eae5ab08d3350b2afc9948c65760534dd2d6b437f4f36971c87ff6af3d993cfbef0a1e82b3eed0a23f7a84a
591ff449751a903ffeae73971cc7cf95c7c66ca6a9df21bbbbac720dff0a3cfa359a675817416961726b1dfa9876037fd3a4fa7b8de7964e55db4fb7772af
25335b242d27dd43e4559c8519203075941eeeaab2ebe45e8f765944755c914c18defa7a19658731ac082fad49b2914a016082a934459e6efe14bcddd9218
d5ba37d94cf54587c4b7a15070a55ce3cb1517c934960e280c76aa6026a9cb3d05154845e4e1625b4b3e45d8133ac231e876d4cad094462858657ad537e01
9ebc2c93731d0ef3145f22b3758f39156721777a338811e55eb7c68b52e2b4e9d2bec2fa08ae7cdc9db7260291f7614311a62ee6b1649161a874421e22b80
ca157dd82f3f917d5272b1b7983da152cff5a15f67f70fda5372c87e50b4cd85a6924867f2f7cc5a18ec58a1771ac2da1b06ea84cc08bcf5cb26ff9c3da44
0c46ebb5dd4ddf66bd05409d711a6f75c38fa00ee66d7e4ab299dde915a0d5c7e0ad121dd9d694b5c75737453ebf9d4ab882d20d9e611aa0bdd37499eef0e
1c539c0b15741fd479d2622ed7102679ec8bb24dbf27852c1f9c28960248cdffd6157e1f1cc1d3feb2d0f559e94b21462a1558e7fb398af82c6f4e24a4f3e
9c3cc07b4ed51104e6fea46f1ec561789e2a57a095f1d7471a8310662fce4ffef819ae004db5146b71fd61c6401302f495d75d298d738dfa83f601ea22830
481d26c49ba78b23d439326de85a793f6fbd175e0ca6d718791a050073f2082bffd7dea3e0000afcccd441640e718ada12d46ade57149abe7370db27fc446
)YINIT";

}  // namespace kdfc::data
